#pragma once

// JSON (de)serialization for polygons.
//
// Wire format:
//   {"kind": "bounded",   "vertices": [["0","0"], ["1","0"], ["1","1"]]}
//   {"kind": "unbounded", "vertices": [...], "first_dir": ["dx","dy"],
//                         "last_dir": ["dx","dy"]}
// Scalars are strings holding either an exact decimal ("2.5", "-0.125") or a
// fraction ("7/3"); plain JSON integers are also accepted.  Non-integer JSON
// numbers are rejected rather than silently rounded.  An optional
// "normalize": true lets clockwise input be reversed instead of rejected.
// Serialization always emits fraction/integer strings in canonical form.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sidedisk/polygon.hpp"
#include "sidedisk/scalar.hpp"

namespace sidedisk {

namespace detail {

inline Rat scalar_from_json(const nlohmann::json& j, const std::string& where) {
    if (j.is_string()) {
        try {
            return parse_scalar(j.get<std::string>());
        } catch (const input_error& e) {
            throw input_error(where + ": " + e.what());
        }
    }
    if (j.is_number_integer()) {
        if (j.is_number_unsigned())
            return parse_scalar(std::to_string(j.get<unsigned long long>()));
        return parse_scalar(std::to_string(j.get<long long>()));
    }
    if (j.is_number())
        throw input_error(where + ": non-integer numbers lose precision; write the value as a "
                                  "decimal or fraction string");
    throw input_error(where + ": expected a scalar string");
}

inline Point point_from_json(const nlohmann::json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2)
        throw input_error(where + ": expected a [x, y] pair");
    return Point{scalar_from_json(j[0], where + "[0]"), scalar_from_json(j[1], where + "[1]")};
}

}  // namespace detail

inline ConvexPolygon polygon_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw input_error("polygon: expected a JSON object");
    if (!j.contains("kind") || !j["kind"].is_string())
        throw input_error("polygon.kind: expected \"bounded\" or \"unbounded\"");
    const std::string kind = j["kind"].get<std::string>();
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw input_error("polygon.vertices: expected an array of [x, y] pairs");
    std::vector<Point> verts;
    for (std::size_t i = 0; i < j["vertices"].size(); ++i)
        verts.push_back(
            detail::point_from_json(j["vertices"][i], "vertices[" + std::to_string(i) + "]"));
    const bool normalize = j.value("normalize", false);
    if (kind == "bounded") return ConvexPolygon::bounded(std::move(verts), normalize);
    if (kind != "unbounded")
        throw input_error("polygon.kind: expected \"bounded\" or \"unbounded\"");
    if (!j.contains("first_dir") || !j.contains("last_dir"))
        throw input_error("polygon: unbounded polygons need first_dir and last_dir");
    Point fd = detail::point_from_json(j["first_dir"], "first_dir");
    Point ld = detail::point_from_json(j["last_dir"], "last_dir");
    return ConvexPolygon::unbounded(std::move(verts), fd, ld, normalize);
}

inline ConvexPolygon parse_polygon(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("polygon JSON: ") + e.what());
    }
    return polygon_from_json(j);
}

inline nlohmann::ordered_json point_to_json(const Point& p) {
    return nlohmann::ordered_json::array({scalar_to_string(p.x), scalar_to_string(p.y)});
}

inline nlohmann::ordered_json polygon_to_json(const ConvexPolygon& p) {
    nlohmann::ordered_json j;
    j["kind"] = p.is_bounded() ? "bounded" : "unbounded";
    auto verts = nlohmann::ordered_json::array();
    for (const Point& v : p.vertices()) verts.push_back(point_to_json(v));
    j["vertices"] = std::move(verts);
    if (!p.is_bounded()) {
        j["first_dir"] = point_to_json(p.first_dir());
        j["last_dir"] = point_to_json(p.last_dir());
    }
    return j;
}

inline std::string polygon_to_string(const ConvexPolygon& p) { return polygon_to_json(p).dump(); }

}  // namespace sidedisk
