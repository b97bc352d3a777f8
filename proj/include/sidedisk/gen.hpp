#pragma once

// Deterministic polygon generators.
//
// Every family is a pure function of (family, n, seed, parameters).  Each
// sampling family makes up to 100 independent attempts; attempt k of family
// f draws from SplitMix64 seeded with derive_seed(derive_seed(seed, salt_f),
// k), so corpora are reproducible from the master seed alone.  Attempts are
// rejected (and retried) whenever any vertex angle has sine below 1e-6, so
// downstream exact arithmetic never sees near-degenerate corners.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <mpfr.h>

#include "sidedisk/geom.hpp"
#include "sidedisk/polygon.hpp"
#include "sidedisk/prng.hpp"
#include "sidedisk/scalar.hpp"

namespace sidedisk {

// A sampling family failed to produce a valid polygon within 100 attempts.
struct generator_error : domain_error {
    explicit generator_error(const std::string& m) : domain_error(m) {}
};

enum class GenFamily {
    RandomEdgeVectors,
    RandomHullOfPoints,
    RegularApprox,
    ThinSliver,
    PaperPentagon,
    UnboundedClip,
};

inline std::string family_name(GenFamily f) {
    switch (f) {
        case GenFamily::RandomEdgeVectors: return "RandomEdgeVectors";
        case GenFamily::RandomHullOfPoints: return "RandomHullOfPoints";
        case GenFamily::RegularApprox: return "RegularApprox";
        case GenFamily::ThinSliver: return "ThinSliver";
        case GenFamily::PaperPentagon: return "PaperPentagon";
        case GenFamily::UnboundedClip: return "UnboundedClip";
    }
    throw domain_error("unknown generator family");
}

inline GenFamily family_from_name(const std::string& s) {
    if (s == "RandomEdgeVectors") return GenFamily::RandomEdgeVectors;
    if (s == "RandomHullOfPoints") return GenFamily::RandomHullOfPoints;
    if (s == "RegularApprox") return GenFamily::RegularApprox;
    if (s == "ThinSliver") return GenFamily::ThinSliver;
    if (s == "PaperPentagon") return GenFamily::PaperPentagon;
    if (s == "UnboundedClip") return GenFamily::UnboundedClip;
    throw input_error("unknown generator family: " + s);
}

struct GenSpec {
    GenFamily family = GenFamily::RandomEdgeVectors;
    std::size_t n = 5;
    std::uint64_t seed = 0;
    Rat scale = Rat(1);   // coordinate scale for the sampling families
    int digits = 20;      // RegularApprox precision
    Rat aspect = Rat(1);  // ThinSliver box aspect

    bool operator==(const GenSpec& o) const {
        return family == o.family && n == o.n && seed == o.seed && scale == o.scale &&
               digits == o.digits && aspect == o.aspect;
    }
};

namespace detail {

// Minimum allowed squared sine of a vertex angle: (1e-6)^2.
inline const Int& sine_floor_inv() {
    static const Int e12 = Int(1000000) * Int(1000000);
    return e12;
}

// True iff every consecutive direction pair turns with |sin| >= 1e-6.
inline bool turns_well_separated(const std::vector<Point>& dirs, bool cyclic) {
    const std::size_t m = dirs.size();
    const std::size_t pairs = cyclic ? m : m - 1;
    for (std::size_t k = 0; k < pairs; ++k) {
        const Point& u = dirs[k];
        const Point& v = dirs[(k + 1) % m];
        const Rat c = cross(u, v);
        if (c * c * sine_floor_inv() < norm2(u) * norm2(v)) return false;
    }
    return true;
}

inline std::vector<Point> traversal_dirs(const ConvexPolygon& p) {
    std::vector<Point> dirs;
    const auto& v = p.vertices();
    if (p.is_bounded()) {
        for (std::size_t i = 0; i < v.size(); ++i) dirs.push_back(v[(i + 1) % v.size()] - v[i]);
        return dirs;
    }
    dirs.push_back(Point{-p.first_dir().x, -p.first_dir().y});
    for (std::size_t i = 0; i + 1 < v.size(); ++i) dirs.push_back(v[i + 1] - v[i]);
    dirs.push_back(p.last_dir());
    return dirs;
}

inline bool angle_sines_ok(const ConvexPolygon& p) {
    return turns_well_separated(traversal_dirs(p), p.is_bounded());
}

inline std::uint64_t attempt_seed(std::uint64_t seed, std::uint64_t family_salt,
                                  std::uint64_t attempt) {
    return derive_seed(derive_seed(seed, family_salt), attempt);
}

// One raw draw of the edge-vector method: n vectors, the last replaced to
// close the sum, sorted by angle.  Returns vertices with v0 at the origin,
// or nothing when the draw is degenerate.
inline std::optional<std::vector<Point>> edge_vector_draw(SplitMix64& rng, std::size_t n) {
    std::vector<Point> vecs;
    for (std::size_t i = 0; i < n; ++i)
        vecs.push_back(Point{rng.next_rat(-8, 8, 16), rng.next_rat(-8, 8, 16)});
    Point sum{Rat(0), Rat(0)};
    for (std::size_t i = 0; i + 1 < n; ++i) sum = sum + vecs[i];
    vecs[n - 1] = Point{-sum.x, -sum.y};
    for (const Point& w : vecs)
        if (sign(w.x) == 0 && sign(w.y) == 0) return std::nullopt;
    std::sort(vecs.begin(), vecs.end(), angle_before);
    if (!turns_well_separated(vecs, true)) return std::nullopt;
    std::vector<Point> verts = {Point{Rat(0), Rat(0)}};
    for (std::size_t i = 0; i + 1 < n; ++i) verts.push_back(verts.back() + vecs[i]);
    return verts;
}

// Strict convex hull (collinear points dropped), CCW; Andrew's monotone chain.
inline std::vector<Point> strict_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return {};
    auto build = [&](bool lower) {
        std::vector<Point> h;
        for (std::size_t k = 0; k < pts.size(); ++k) {
            const Point& p = pts[lower ? k : pts.size() - 1 - k];
            while (h.size() >= 2 &&
                   sign(cross(h[h.size() - 1] - h[h.size() - 2], p - h[h.size() - 1])) <= 0)
                h.pop_back();
            h.push_back(p);
        }
        h.pop_back();
        return h;
    };
    std::vector<Point> lower = build(true), upper = build(false);
    lower.insert(lower.end(), upper.begin(), upper.end());
    return lower;
}

}  // namespace detail

// Strictly convex CCW n-gon from n random edge vectors sorted by angle.
inline ConvexPolygon random_convex_edges(std::size_t n, std::uint64_t seed,
                                         const Rat& scale = Rat(1)) {
    if (n < 3) throw input_error("polygon generation needs n >= 3");
    if (sign(scale) <= 0) throw input_error("scale must be positive");
    for (std::uint64_t attempt = 0; attempt < 100; ++attempt) {
        SplitMix64 rng(detail::attempt_seed(seed, 0, attempt));
        auto verts = detail::edge_vector_draw(rng, n);
        if (!verts) continue;
        for (Point& v : *verts) v = v * scale;
        try {
            return ConvexPolygon::bounded(std::move(*verts));
        } catch (const input_error&) {
            continue;
        }
    }
    throw generator_error("edge-vector generator failed 100 attempts");
}

// Convex hull of random points, trimmed to exactly n vertices.
inline ConvexPolygon random_hull_of_points(std::size_t n, std::uint64_t seed,
                                           const Rat& scale = Rat(1)) {
    if (n < 3) throw input_error("polygon generation needs n >= 3");
    if (sign(scale) <= 0) throw input_error("scale must be positive");
    for (std::uint64_t attempt = 0; attempt < 100; ++attempt) {
        SplitMix64 rng(detail::attempt_seed(seed, 1, attempt));
        std::vector<Point> pts;
        for (std::size_t i = 0; i < 3 * n + 16; ++i)
            pts.push_back(Point{rng.next_rat(0, 256, 16) * scale / 256,
                                rng.next_rat(0, 256, 16) * scale / 256});
        std::vector<Point> hull = detail::strict_hull(std::move(pts));
        if (hull.size() < n) continue;
        // Trim to n vertices by repeatedly flattening the shallowest corner
        // (smallest squared-sine turn, ties to the lowest index).
        while (hull.size() > n) {
            const std::size_t m = hull.size();
            std::size_t worst = 0;
            Rat worst_num(0), worst_den(1);
            for (std::size_t k = 0; k < m; ++k) {
                const Point u = hull[k] - hull[(k + m - 1) % m];
                const Point w = hull[(k + 1) % m] - hull[k];
                const Rat c = cross(u, w);
                const Rat num = c * c, den = norm2(u) * norm2(w);
                if (k == 0 || num * worst_den < worst_num * den) {
                    worst = k;
                    worst_num = num;
                    worst_den = den;
                }
            }
            hull.erase(hull.begin() + static_cast<std::ptrdiff_t>(worst));
        }
        try {
            ConvexPolygon p = ConvexPolygon::bounded(std::move(hull));
            if (detail::angle_sines_ok(p)) return p;
        } catch (const input_error&) {
        }
    }
    throw generator_error("hull-of-points generator failed 100 attempts");
}

// Rational approximation of the regular n-gon on the unit circle, vertex i
// at angle 2*pi*i/n, coordinates exact decimals with `digits` places.
inline ConvexPolygon regular_approx(std::size_t n, int digits) {
    if (n < 3) throw input_error("regular_approx needs n >= 3");
    if (digits < 12) throw input_error("regular_approx needs digits >= 12");
    if (n == 4)  // exactly representable: no approximation
        return ConvexPolygon::bounded({Point{Rat(1), Rat(0)}, Point{Rat(0), Rat(1)},
                                       Point{Rat(-1), Rat(0)}, Point{Rat(0), Rat(-1)}});
    for (int d = digits, tries = 0; tries < 8; ++tries, d *= 2) {
        const mpfr_prec_t prec = 128 + static_cast<mpfr_prec_t>(4 * d);
        Int den10;
        mpz_ui_pow_ui(den10.get_mpz_t(), 10, static_cast<unsigned long>(d));
        mpfr_t pi, th, val;
        mpfr_inits2(prec, pi, th, val, static_cast<mpfr_ptr>(nullptr));
        mpfr_const_pi(pi, MPFR_RNDN);
        std::vector<Point> verts;
        for (std::size_t i = 0; i < n; ++i) {
            mpfr_mul_ui(th, pi, 2 * static_cast<unsigned long>(i), MPFR_RNDN);
            mpfr_div_ui(th, th, static_cast<unsigned long>(n), MPFR_RNDN);
            Int xz, yz;
            mpfr_cos(val, th, MPFR_RNDN);
            mpfr_mul_z(val, val, den10.get_mpz_t(), MPFR_RNDN);
            mpfr_get_z(xz.get_mpz_t(), val, MPFR_RNDN);
            mpfr_sin(val, th, MPFR_RNDN);
            mpfr_mul_z(val, val, den10.get_mpz_t(), MPFR_RNDN);
            mpfr_get_z(yz.get_mpz_t(), val, MPFR_RNDN);
            Rat x(xz, den10), y(yz, den10);
            x.canonicalize();
            y.canonicalize();
            verts.push_back(Point{x, y});
        }
        mpfr_clears(pi, th, val, static_cast<mpfr_ptr>(nullptr));
        try {
            ConvexPolygon p = ConvexPolygon::bounded(std::move(verts));
            if (detail::angle_sines_ok(p)) return p;
        } catch (const input_error&) {
        }
    }
    throw generator_error("regular_approx could not reach convexity");
}

// The flat pentagon used as the running counterexample candidate.
inline ConvexPolygon paper_pentagon() {
    return ConvexPolygon::bounded({Point{Rat(1), Rat(9)}, Point{Rat(0), Rat(3)},
                                   Point{Rat(0), Rat(-3)}, Point{Rat(1), Rat(-9)},
                                   Point{Rat(60), Rat(0)}});
}

// Convex n-gon spanning exactly a 1 x (1/aspect) bounding box.
inline ConvexPolygon thin_sliver(std::size_t n, const Rat& aspect, std::uint64_t seed) {
    if (n < 3) throw input_error("polygon generation needs n >= 3");
    if (aspect < 1) throw input_error("sliver aspect must be >= 1");
    for (std::uint64_t attempt = 0; attempt < 100; ++attempt) {
        SplitMix64 rng(detail::attempt_seed(seed, 2, attempt));
        auto verts = detail::edge_vector_draw(rng, n);
        if (!verts) continue;
        Rat xmin = (*verts)[0].x, xmax = xmin, ymin = (*verts)[0].y, ymax = ymin;
        for (const Point& v : *verts) {
            xmin = std::min(xmin, v.x);
            xmax = std::max(xmax, v.x);
            ymin = std::min(ymin, v.y);
            ymax = std::max(ymax, v.y);
        }
        if (sign(xmax - xmin) == 0 || sign(ymax - ymin) == 0) continue;
        std::vector<Point> squashed;
        for (const Point& v : *verts)
            squashed.push_back(Point{(v.x - xmin) / (xmax - xmin),
                                     (v.y - ymin) / ((ymax - ymin) * aspect)});
        try {
            ConvexPolygon p = ConvexPolygon::bounded(std::move(squashed));
            if (detail::angle_sines_ok(p)) return p;
        } catch (const input_error&) {
        }
    }
    throw generator_error("thin-sliver generator failed 100 attempts");
}

// Unbounded polygon with n sides (two rays, n-2 segments): the edge-vector
// method restricted to an open halfplane of directions, which is exactly a
// bounded (n+1)-gon with its far vertex deleted and the incident sides
// extended to rays.
inline ConvexPolygon unbounded_clip(std::size_t n, std::uint64_t seed,
                                    const Rat& scale = Rat(1)) {
    if (n < 3) throw input_error("polygon generation needs n >= 3");
    if (sign(scale) <= 0) throw input_error("scale must be positive");
    for (std::uint64_t attempt = 0; attempt < 100; ++attempt) {
        SplitMix64 rng(detail::attempt_seed(seed, 3, attempt));
        std::vector<Point> dirs;
        for (std::size_t i = 0; i < n; ++i)
            dirs.push_back(Point{rng.next_pos_rat(8, 16), rng.next_rat(-8, 8, 16)});
        std::sort(dirs.begin(), dirs.end(), detail::angle_before);
        if (!detail::turns_well_separated(dirs, false)) continue;
        std::vector<Point> chain = {Point{Rat(0), Rat(0)}};
        for (std::size_t i = 1; i + 1 < n; ++i) chain.push_back(chain.back() + dirs[i] * scale);
        try {
            ConvexPolygon p = ConvexPolygon::unbounded(
                std::move(chain), Point{-dirs[0].x, -dirs[0].y}, dirs[n - 1]);
            if (detail::angle_sines_ok(p)) return p;
        } catch (const input_error&) {
        }
    }
    throw generator_error("unbounded-clip generator failed 100 attempts");
}

inline ConvexPolygon generate(const GenSpec& spec) {
    switch (spec.family) {
        case GenFamily::RandomEdgeVectors:
            return random_convex_edges(spec.n, spec.seed, spec.scale);
        case GenFamily::RandomHullOfPoints:
            return random_hull_of_points(spec.n, spec.seed, spec.scale);
        case GenFamily::RegularApprox:
            return regular_approx(spec.n, spec.digits);
        case GenFamily::ThinSliver:
            return thin_sliver(spec.n, spec.aspect, spec.seed);
        case GenFamily::PaperPentagon:
            if (spec.n != 5) throw input_error("PaperPentagon is always a pentagon (n = 5)");
            return paper_pentagon();
        case GenFamily::UnboundedClip:
            return unbounded_clip(spec.n, spec.seed, spec.scale);
    }
    throw domain_error("unknown generator family");
}

}  // namespace sidedisk
