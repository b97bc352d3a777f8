#pragma once

// Convex polygons, bounded and unbounded, with their side disks.
//
// A bounded polygon stores its vertices in CCW order, rotated so the
// lexicographically smallest vertex comes first (one canonical
// representation per geometric polygon, which keeps serialization and
// determinism checks trivial).  Side i is the segment vertex[i] ->
// vertex[i+1 mod n].
//
// An unbounded polygon stores a finite vertex chain plus two outward ray
// directions; side 0 is the ray at the first chain vertex, side n-1 the ray
// at the last, and the rays are never treated as consecutive sides.
//
// Validation is exact: strict left turns everywhere (collinear triples are
// rejected, not merged), and for bounded input the edge directions must wind
// around the circle exactly once, which rules out star traversals that turn
// left at every vertex but wind twice.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sidedisk/geom.hpp"
#include "sidedisk/scalar.hpp"

namespace sidedisk {

struct Segment {
    Point p, q;  // traversed p -> q, interior on the left
};
struct Ray {
    Point apex;
    Point dir;  // points away from the vertex chain
};
inline bool operator==(const Segment& a, const Segment& b) { return a.p == b.p && a.q == b.q; }
inline bool operator==(const Ray& a, const Ray& b) { return a.apex == b.apex && a.dir == b.dir; }

using Side = std::variant<Segment, Ray>;

enum class PolyKind { Bounded, Unbounded };

namespace detail {

// 0 for angles in [0, pi), 1 for [pi, 2*pi); the zero vector never reaches here.
inline int angle_half(const Point& u) {
    return (sign(u.y) > 0 || (sign(u.y) == 0 && sign(u.x) > 0)) ? 0 : 1;
}

// True iff rotating CCW from u by less than a full turn reaches v without
// crossing the +x axis direction.
inline bool angle_before(const Point& u, const Point& v) {
    const int hu = angle_half(u), hv = angle_half(v);
    if (hu != hv) return hu < hv;
    return sign(cross(u, v)) > 0;
}

}  // namespace detail

class ConvexPolygon {
public:
    // Validates and canonicalizes a bounded CCW polygon.  With `normalize`,
    // clockwise input is reversed instead of rejected.
    static ConvexPolygon bounded(std::vector<Point> verts, bool normalize = false) {
        std::optional<std::string> err = check_bounded(verts);
        if (err) {
            if (normalize) {
                std::vector<Point> rev(verts.rbegin(), verts.rend());
                if (!check_bounded(rev)) return ConvexPolygon(std::move(rev));
            }
            throw input_error("invalid polygon: " + *err);
        }
        return ConvexPolygon(std::move(verts));
    }

    // Validates an unbounded polygon: vertex chain in CCW order plus the two
    // outward ray directions at its ends.
    static ConvexPolygon unbounded(std::vector<Point> chain, Point first_dir, Point last_dir,
                                   bool normalize = false) {
        std::optional<std::string> err = check_unbounded(chain, first_dir, last_dir);
        if (err) {
            if (normalize) {
                std::vector<Point> rev(chain.rbegin(), chain.rend());
                if (!check_unbounded(rev, last_dir, first_dir))
                    return ConvexPolygon(std::move(rev), last_dir, first_dir);
            }
            throw input_error("invalid polygon: " + *err);
        }
        return ConvexPolygon(std::move(chain), std::move(first_dir), std::move(last_dir));
    }

    PolyKind kind() const { return kind_; }
    bool is_bounded() const { return kind_ == PolyKind::Bounded; }

    std::size_t num_sides() const {
        return is_bounded() ? verts_.size() : verts_.size() + 1;
    }
    const std::vector<Point>& vertices() const { return verts_; }
    const Point& first_dir() const { return require_unbounded(), first_dir_; }
    const Point& last_dir() const { return require_unbounded(), last_dir_; }

    Side side(std::size_t i) const {
        const std::size_t n = num_sides();
        if (i >= n) throw domain_error("side index out of range");
        if (is_bounded()) return Segment{verts_[i], verts_[(i + 1) % n]};
        if (i == 0) return Ray{verts_.front(), first_dir_};
        if (i == n - 1) return Ray{verts_.back(), last_dir_};
        return Segment{verts_[i - 1], verts_[i]};
    }

    // Supporting line of side i, oriented so the interior has positive eval.
    Line side_line(std::size_t i) const {
        Side s = side(i);
        if (std::holds_alternative<Segment>(s)) {
            const auto& seg = std::get<Segment>(s);
            return Line::through(seg.p, seg.q);
        }
        const auto& ray = std::get<Ray>(s);
        // Side 0 is traversed from infinity toward its apex, side n-1 away.
        if (i == 0) return Line::through(ray.apex + ray.dir, ray.apex);
        return Line::through(ray.apex, ray.apex + ray.dir);
    }

    // A point strictly inside (centroid of boundary points spanning at
    // least two distinct supporting lines).
    Point interior_point() const {
        Rat sx(0), sy(0);
        long cnt = 0;
        for (const Point& v : verts_) { sx += v.x; sy += v.y; ++cnt; }
        if (!is_bounded()) {
            Point a = verts_.front() + first_dir_;
            Point b = verts_.back() + last_dir_;
            sx += a.x + b.x;
            sy += a.y + b.y;
            cnt += 2;
        }
        return Point{sx / cnt, sy / cnt};
    }

    // Closed region membership.
    bool contains(const Point& p) const {
        for (std::size_t i = 0; i < num_sides(); ++i)
            if (sign(side_line(i).eval(p)) < 0) return false;
        return true;
    }

    // Twice the signed area (bounded polygons only); positive for CCW.
    Rat area2x() const {
        require_bounded();
        Rat s(0);
        for (std::size_t i = 0; i < verts_.size(); ++i)
            s += cross(verts_[i], verts_[(i + 1) % verts_.size()]);
        return s;
    }

    bool operator==(const ConvexPolygon& o) const {
        if (kind_ != o.kind_ || verts_ != o.verts_) return false;
        if (!is_bounded()) return first_dir_ == o.first_dir_ && last_dir_ == o.last_dir_;
        return true;
    }
    bool operator!=(const ConvexPolygon& o) const { return !(*this == o); }

private:
    explicit ConvexPolygon(std::vector<Point> verts)
        : kind_(PolyKind::Bounded), verts_(std::move(verts)) {
        canonical_rotate();
    }
    ConvexPolygon(std::vector<Point> chain, Point fd, Point ld)
        : kind_(PolyKind::Unbounded), verts_(std::move(chain)),
          first_dir_(std::move(fd)), last_dir_(std::move(ld)) {}

    void require_bounded() const {
        if (!is_bounded()) throw domain_error("operation requires a bounded polygon");
    }
    void require_unbounded() const {
        if (is_bounded()) throw domain_error("operation requires an unbounded polygon");
    }

    // Rotate the vertex list so the lexicographically smallest vertex leads.
    void canonical_rotate() {
        std::size_t best = 0;
        for (std::size_t i = 1; i < verts_.size(); ++i) {
            const Point& a = verts_[i];
            const Point& b = verts_[best];
            if (a.x < b.x || (a.x == b.x && a.y < b.y)) best = i;
        }
        std::rotate(verts_.begin(), verts_.begin() + best, verts_.end());
    }

    static std::optional<std::string> check_bounded(const std::vector<Point>& v) {
        const std::size_t n = v.size();
        if (n < 3) return "a bounded polygon needs at least 3 vertices";
        for (std::size_t i = 0; i < n; ++i)
            if (v[i] == v[(i + 1) % n]) return "repeated vertex";
        std::vector<Point> t(n);
        for (std::size_t i = 0; i < n; ++i) t[i] = v[(i + 1) % n] - v[i];
        int wraps = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const Point& a = t[i];
            const Point& b = t[(i + 1) % n];
            const int c = sign(cross(a, b));
            if (c == 0) return "collinear adjacent sides";
            if (c < 0) return "not convex and counterclockwise";
            if (!detail::angle_before(a, b)) ++wraps;
        }
        if (wraps != 1) return "boundary winds more than once";
        return std::nullopt;
    }

    static std::optional<std::string> check_unbounded(const std::vector<Point>& v,
                                                      const Point& fd, const Point& ld) {
        if (v.size() < 2) return "an unbounded polygon needs at least 2 vertices";
        if (sign(fd.x) == 0 && sign(fd.y) == 0) return "zero ray direction";
        if (sign(ld.x) == 0 && sign(ld.y) == 0) return "zero ray direction";
        for (std::size_t i = 0; i + 1 < v.size(); ++i)
            if (v[i] == v[i + 1]) return "repeated vertex";
        // Traversal directions: in along the first ray, through the chain,
        // out along the last ray.
        std::vector<Point> t;
        t.push_back(Point{-fd.x, -fd.y});
        for (std::size_t i = 0; i + 1 < v.size(); ++i) t.push_back(v[i + 1] - v[i]);
        t.push_back(ld);
        for (std::size_t i = 0; i + 1 < t.size(); ++i) {
            const int c = sign(cross(t[i], t[i + 1]));
            if (c == 0) return "collinear adjacent sides";
            if (c < 0) return "not convex and counterclockwise";
        }
        // Total turning at most pi: every direction stays in the closed
        // upper halfplane of the first one, antiparallel only allowed.
        for (std::size_t i = 1; i < t.size(); ++i) {
            const int c = sign(cross(t[0], t[i]));
            if (c < 0) return "rays turn past a halfplane";
            if (c == 0 && sign(dot(t[0], t[i])) > 0) return "rays turn past a halfplane";
        }
        return std::nullopt;
    }

    PolyKind kind_;
    std::vector<Point> verts_;
    Point first_dir_{Rat(0), Rat(0)};
    Point last_dir_{Rat(0), Rat(0)};
};

// One generalized disk per side: Thales disk on each segment, a halfplane
// bounded by the perpendicular at the apex for each ray.
inline std::vector<GDisk> side_disks(const ConvexPolygon& p) {
    std::vector<GDisk> out;
    out.reserve(p.num_sides());
    for (std::size_t i = 0; i < p.num_sides(); ++i) {
        Side s = p.side(i);
        if (std::holds_alternative<Segment>(s)) {
            const auto& seg = std::get<Segment>(s);
            out.emplace_back(disk_from_diameter(seg.p, seg.q));
        } else {
            const auto& ray = std::get<Ray>(s);
            out.emplace_back(halfplane_of_ray(ray.apex, ray.dir));
        }
    }
    return out;
}

namespace detail {

// Canonicalizes an (i, j) side pair: returns (i, j) such that j follows i,
// or the ray pair as (0, n-1).  Throws when the pair is not composable.
inline std::pair<std::size_t, std::size_t> composable_pair(const ConvexPolygon& p, std::size_t i,
                                                           std::size_t j) {
    const std::size_t n = p.num_sides();
    if (i >= n || j >= n || i == j) throw domain_error("side indices out of range");
    if (p.is_bounded()) {
        if (j == (i + 1) % n) return {i, j};
        if (i == (j + 1) % n) return {j, i};
        throw domain_error("sides are not consecutive");
    }
    // Unbounded: the two rays may be composed; otherwise only chain-adjacent
    // pairs (the rays are not consecutive with each other through infinity).
    if ((i == 0 && j == n - 1) || (j == 0 && i == n - 1)) return {0, n - 1};
    if (j == i + 1) return {i, j};
    if (i == j + 1) return {j, i};
    throw domain_error("sides are not consecutive");
}

}  // namespace detail

// The composite side a|b: the diagonal of two consecutive segments, the
// shifted ray of a ray-segment pair, or the segment joining the two ray
// apexes of an unbounded polygon.
inline Side compose_ab(const ConvexPolygon& p, std::size_t i, std::size_t j) {
    auto [a, b] = detail::composable_pair(p, i, j);
    const std::size_t n = p.num_sides();
    if (!p.is_bounded() && a == 0 && b == n - 1)
        return Segment{p.vertices().back(), p.vertices().front()};
    Side sa = p.side(a), sb = p.side(b);
    if (std::holds_alternative<Segment>(sa) && std::holds_alternative<Segment>(sb))
        return Segment{std::get<Segment>(sa).p, std::get<Segment>(sb).q};
    if (std::holds_alternative<Ray>(sa)) {
        // Incoming ray followed by a segment: parallel ray from the far
        // endpoint of the segment.
        return Ray{std::get<Segment>(sb).q, std::get<Ray>(sa).dir};
    }
    // Segment followed by the outgoing ray.
    return Ray{std::get<Segment>(sa).p, std::get<Ray>(sb).dir};
}

// Replaces sides i and j by compose_ab(p, i, j); all other sides survive.
inline ConvexPolygon elide(const ConvexPolygon& p, std::size_t i, std::size_t j) {
    auto [a, b] = detail::composable_pair(p, i, j);
    const std::size_t n = p.num_sides();
    if (n - 1 < 3) throw domain_error("elision would leave fewer than 3 sides");
    try {
        if (p.is_bounded()) {
            // Drop the vertex the two sides share.
            std::vector<Point> verts;
            const std::size_t shared = (a + 1) % n;
            for (std::size_t k = 0; k < n; ++k)
                if (k != shared) verts.push_back(p.vertices()[k]);
            return ConvexPolygon::bounded(std::move(verts));
        }
        if (a == 0 && b == n - 1)  // both rays -> close the chain
            return ConvexPolygon::bounded(p.vertices());
        std::vector<Point> chain = p.vertices();
        if (a == 0) {
            chain.erase(chain.begin());
            return ConvexPolygon::unbounded(std::move(chain), p.first_dir(), p.last_dir());
        }
        chain.pop_back();
        return ConvexPolygon::unbounded(std::move(chain), p.first_dir(), p.last_dir());
    } catch (const input_error& e) {
        throw domain_error(std::string("elision produced an invalid polygon: ") + e.what());
    }
}

// Extends sides taken in CCW order from some convex polygon to the full
// (possibly unbounded) convex polygon bounded by their supporting lines.
// Side k of the result lies on the line of input side (offset + k) mod m;
// the offset is 0 for bounded results.  When the inputs' directions leave
// two angular gaps of at least pi, the halfplane intersection is a slab-like
// region whose boundary is disconnected; that is not a polygon and is
// rejected.
inline ConvexPolygon extend_to_polygon(const std::vector<Side>& sides,
                                       std::size_t* offset_out = nullptr) {
    const std::size_t m = sides.size();
    if (m < 3) throw domain_error("need at least 3 sides to extend");
    std::vector<Line> lines;
    std::vector<Point> dirs;
    for (const Side& s : sides) {
        if (!std::holds_alternative<Segment>(s))
            throw domain_error("only segment sides can be extended");
        const auto& seg = std::get<Segment>(s);
        lines.push_back(Line::through(seg.p, seg.q));
        dirs.push_back(seg.q - seg.p);
    }
    // Directions must be in strict CCW order winding exactly once.
    int wraps = 0;
    std::vector<std::size_t> big_gaps;  // turn of at least pi before index k+1
    for (std::size_t k = 0; k < m; ++k) {
        const Point& u = dirs[k];
        const Point& v = dirs[(k + 1) % m];
        const int c = sign(cross(u, v));
        if (c == 0 && sign(dot(u, v)) > 0) throw domain_error("inconsistent side orientation");
        if (!detail::angle_before(u, v)) ++wraps;
        if (c < 0 || (c == 0 && sign(dot(u, v)) < 0)) big_gaps.push_back(k);
    }
    if (wraps != 1) throw domain_error("inconsistent side orientation");
    if (big_gaps.size() > 1)
        throw domain_error("sides open in two directions; their extension is not a polygon");

    if (big_gaps.empty()) {
        // Bounded: vertex k joins lines k-1 and k.
        std::vector<Point> verts;
        for (std::size_t k = 0; k < m; ++k) {
            auto x = line_intersection(lines[(k + m - 1) % m], lines[k]);
            if (!x) throw domain_error("parallel adjacent supporting lines");
            verts.push_back(*x);
        }
        if (offset_out) *offset_out = 0;
        try {
            return ConvexPolygon::bounded(std::move(verts));
        } catch (const input_error& e) {
            throw domain_error(std::string("extension degenerated: ") + e.what());
        }
    }

    // Unbounded: reorder so the opening sits between the last and first side.
    const std::size_t start = (big_gaps.front() + 1) % m;
    std::vector<Point> chain;
    for (std::size_t k = 1; k < m; ++k) {
        const std::size_t ia = (start + k - 1) % m, ib = (start + k) % m;
        auto x = line_intersection(lines[ia], lines[ib]);
        if (!x) throw domain_error("parallel adjacent supporting lines");
        chain.push_back(*x);
    }
    if (offset_out) *offset_out = start;
    try {
        return ConvexPolygon::unbounded(std::move(chain), Point{-dirs[start].x, -dirs[start].y},
                                        dirs[(start + m - 1) % m]);
    } catch (const input_error& e) {
        throw domain_error(std::string("extension degenerated: ") + e.what());
    }
}

}  // namespace sidedisk
