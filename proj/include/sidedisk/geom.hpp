#pragma once

// Exact planar geometry kernel.
//
// Everything here is decided with exact rational arithmetic.  Square roots
// never appear: distances are carried squared, and comparisons that would
// classically need a square root (disk-disk contact, disk-in-disk
// containment) are decided by the two-stage squaring trick spelled out at
// each predicate.  Disks and halfplanes are closed sets; tangency counts as
// intersection.

#include <optional>
#include <string>
#include <variant>

#include "sidedisk/scalar.hpp"

namespace sidedisk {

struct Point {
    Rat x, y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
    Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
    Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
    Point operator*(const Rat& s) const { return {x * s, y * s}; }
};

inline Rat dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }
inline Rat cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
inline Rat norm2(const Point& u) { return dot(u, u); }
inline Rat dist2(const Point& p, const Point& q) { return norm2(p - q); }
inline Point midpoint(const Point& p, const Point& q) {
    return {(p.x + q.x) / 2, (p.y + q.y) / 2};
}
inline Point perp(const Point& u) { return {-u.y, u.x}; }  // left normal

// Sign of the turn p->q->r: >0 left (counterclockwise), <0 right, 0 collinear.
inline int orientation(const Point& p, const Point& q, const Point& r) {
    return sign(cross(q - p, r - p));
}

// a*x + b*y + c = 0 with (a, b) != (0, 0).
struct Line {
    Rat a, b, c;

    Line(Rat a_, Rat b_, Rat c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
        if (sign(a) == 0 && sign(b) == 0) throw domain_error("degenerate line: zero normal");
    }

    static Line through(const Point& p, const Point& q) {
        if (p == q) throw domain_error("line through two identical points");
        // normal is the right-hand perpendicular of q-p, so eval()>0 on the left
        return Line(p.y - q.y, q.x - p.x, p.x * q.y - p.y * q.x);
    }

    Rat eval(const Point& p) const { return a * p.x + b * p.y + c; }
    Point normal() const { return {a, b}; }
    Point direction() const { return {-b, a}; }
    Rat norm2() const { return a * a + b * b; }
    Line flipped() const { return Line(-a, -b, -c); }

    bool parallel_to(const Line& o) const { return sign(a * o.b - b * o.a) == 0; }
    bool same_line(const Line& o) const {
        return parallel_to(o) && sign(a * o.c - c * o.a) == 0 && sign(b * o.c - c * o.b) == 0;
    }

    // Equivalent line with coprime integer coefficients, a>0 or (a==0 and b>0).
    Line primitive() const {
        Int l = lcm(lcm(a.get_den(), b.get_den()), c.get_den());
        Int na = Int(a.get_num() * (l / a.get_den()));
        Int nb = Int(b.get_num() * (l / b.get_den()));
        Int nc = Int(c.get_num() * (l / c.get_den()));
        Int g = gcd(gcd(na, nb), nc);
        if (sign(g) != 0) { na /= g; nb /= g; nc /= g; }
        if (sign(na) < 0 || (sign(na) == 0 && sign(nb) < 0)) { na = -na; nb = -nb; nc = -nc; }
        return Line(Rat(na), Rat(nb), Rat(nc));
    }
};

inline std::optional<Point> line_intersection(const Line& l1, const Line& l2) {
    const Rat det = l1.a * l2.b - l2.a * l1.b;
    if (sign(det) == 0) return std::nullopt;
    return Point{(l1.b * l2.c - l2.b * l1.c) / det, (l2.a * l1.c - l1.a * l2.c) / det};
}

inline Rat dist2_point_line(const Point& p, const Line& l) {
    return sqr(l.eval(p)) / l.norm2();
}

inline Point reflect_across(const Point& p, const Line& l) {
    const Rat t = l.eval(p) / l.norm2();
    return {p.x - 2 * t * l.a, p.y - 2 * t * l.b};
}

// Closed ray {apex + t*dir : t >= 0}, dir != 0.
struct Halfline {
    Point apex;
    Point dir;

    Halfline(Point apex_, Point dir_) : apex(std::move(apex_)), dir(std::move(dir_)) {
        if (sign(dir.x) == 0 && sign(dir.y) == 0)
            throw domain_error("degenerate halfline: zero direction");
    }

    bool contains(const Point& p) const {
        const Point d = p - apex;
        return sign(cross(dir, d)) == 0 && sign(dot(dir, d)) >= 0;
    }
};

// Do two closed rays share a point?  Exact.
inline bool halflines_intersect(const Halfline& r, const Halfline& s) {
    const Rat den = cross(r.dir, s.dir);
    const Point w = s.apex - r.apex;
    if (sign(den) != 0) {
        // r.apex + t*r.dir = s.apex + u*s.dir  =>  t = cross(w, s.dir)/den, u = cross(w, r.dir)/den
        const Rat t = cross(w, s.dir) / den;
        const Rat u = cross(w, r.dir) / den;
        return sign(t) >= 0 && sign(u) >= 0;
    }
    if (sign(cross(r.dir, w)) != 0) return false;  // parallel, different carrier lines
    // collinear: overlap iff one apex is on the other ray
    return r.contains(s.apex) || s.contains(r.apex);
}

// Does a closed ray meet a closed segment?  Exact.
inline bool halfline_meets_segment(const Halfline& r, const Point& p, const Point& q) {
    if (p == q) return r.contains(p);
    const Point sd = q - p;
    const Rat den = cross(r.dir, sd);
    const Point w = p - r.apex;
    if (sign(den) != 0) {
        const Rat t = cross(w, sd) / den;
        const Rat u = cross(w, r.dir) / den;
        return sign(t) >= 0 && sign(u) >= 0 && u <= 1;
    }
    if (sign(cross(r.dir, w)) != 0) return false;
    return r.contains(p) || r.contains(q) ||
           (sign(dot(p - r.apex, q - r.apex)) <= 0);  // apex inside the segment
}

// Closed disk given by center and squared radius.
struct Disk {
    Point center;
    Rat r2;

    Disk(Point c, Rat r2_) : center(std::move(c)), r2(std::move(r2_)) {
        if (sign(r2) < 0) throw domain_error("disk with negative squared radius");
    }
};

inline bool operator==(const Disk& a, const Disk& b) {
    return a.center == b.center && a.r2 == b.r2;
}

inline Disk disk_from_diameter(const Point& p, const Point& q) {
    if (p == q) throw domain_error("degenerate diameter");
    return Disk(midpoint(p, q), dist2(p, q) / 4);
}

// Closed halfplane {p : inside_sign * boundary.eval(p) >= 0}; boundary included.
struct Halfplane {
    Line boundary;
    int inside_sign;

    Halfplane(Line b, int s) : boundary(std::move(b)), inside_sign(s) {
        if (s != 1 && s != -1) throw domain_error("halfplane inside_sign must be +1 or -1");
    }

    Rat oriented_eval(const Point& p) const { return Rat(inside_sign) * boundary.eval(p); }
    bool contains(const Point& p) const { return sign(oriented_eval(p)) >= 0; }
};

inline bool operator==(const Halfplane& a, const Halfplane& b) {
    return a.inside_sign == b.inside_sign && a.boundary.a == b.boundary.a &&
           a.boundary.b == b.boundary.b && a.boundary.c == b.boundary.c;
}

// Side disk of a ray side: the closed halfplane bounded by the perpendicular
// to the ray at its apex, containing the ray.
inline Halfplane halfplane_of_ray(const Point& apex, const Point& dir) {
    return Halfplane(Line(dir.x, dir.y, -dot(dir, apex)), +1);
}

using GDisk = std::variant<Disk, Halfplane>;

inline bool point_in_gdisk(const Point& p, const GDisk& g) {
    if (const Disk* d = std::get_if<Disk>(&g)) return dist2(p, d->center) <= d->r2;
    return std::get<Halfplane>(g).contains(p);
}

// Median length, squared: for a triangle with |PQ|^2 = pq2, |PR|^2 = pr2,
// |QR|^2 = qr2 and M the midpoint of QR, returns |PM|^2.
inline Rat apollonius_pm2(const Rat& pq2, const Rat& pr2, const Rat& qr2) {
    return (2 * (pq2 + pr2) - qr2) / 4;
}

// Squared diagonal |PR|^2 of a quadrilateral with an inscribed circle, from
// the four tangent lengths a (at P), d (at Q), c (at R), b (at S).
inline Rat tangential_diagonal2(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    if (sign(a) <= 0 || sign(b) <= 0 || sign(c) <= 0 || sign(d) <= 0)
        throw domain_error("tangential_diagonal2 needs strictly positive tangent lengths");
    return ((a + c) / (b + d)) * ((a + c) * (b + d) + 4 * b * d);
}

// Power of the point: squared tangent length from p to the disk boundary.
// Domain error if p is strictly inside.
inline Rat tangent_length2(const Point& p, const Disk& d) {
    const Rat t2 = dist2(p, d.center) - d.r2;
    if (sign(t2) < 0) throw domain_error("tangent_length2: point strictly inside disk");
    return t2;
}

namespace detail {

// d <= r1 + r2 decided on squares: with L = d2 - r1sq - r2sq the condition is
// L <= 0, or L > 0 and L^2 <= 4*r1sq*r2sq.
inline bool sum_of_roots_at_least(const Rat& d2, const Rat& r1sq, const Rat& r2sq) {
    const Rat L = d2 - r1sq - r2sq;
    if (sign(L) <= 0) return true;
    return L * L <= 4 * r1sq * r2sq;
}

inline bool disks_intersect(const Disk& d1, const Disk& d2) {
    return sum_of_roots_at_least(dist2(d1.center, d2.center), d1.r2, d2.r2);
}

inline bool disk_meets_halfplane(const Disk& d, const Halfplane& h) {
    if (h.contains(d.center)) return true;
    return dist2_point_line(d.center, h.boundary) <= d.r2;
}

inline bool halfplanes_intersect(const Halfplane& h1, const Halfplane& h2) {
    const Line l1 = h1.boundary;
    const Line l2 = h2.boundary;
    if (sign(l1.a * l2.b - l2.a * l1.b) != 0) return true;  // crossing boundaries
    // Parallel.  Normalize both to "n.x*x + n.y*y >= k" form with the same n.
    // h: inside_sign*(a x + b y + c) >= 0  <=>  (s*a) x + (s*b) y >= -s*c.
    const Rat a1 = Rat(h1.inside_sign) * l1.a, b1 = Rat(h1.inside_sign) * l1.b,
              k1 = -Rat(h1.inside_sign) * l1.c;
    const Rat a2 = Rat(h2.inside_sign) * l2.a, b2 = Rat(h2.inside_sign) * l2.b,
              k2 = -Rat(h2.inside_sign) * l2.c;
    // a2 = t*a1, b2 = t*b1 for a unique t != 0.
    const Rat t = (sign(a1) != 0) ? a2 / a1 : b2 / b1;
    if (sign(t) > 0) return true;  // same inside direction: nested halfplanes
    // Opposite directions: {n.x >= k1} and {t n.x >= k2} i.e. {n.x <= k2/t}.
    return k1 <= k2 / t;
}

}  // namespace detail

// Do two generalized disks (closed disk or closed halfplane) intersect?
inline bool gdisks_intersect(const GDisk& g1, const GDisk& g2) {
    const Disk* d1 = std::get_if<Disk>(&g1);
    const Disk* d2 = std::get_if<Disk>(&g2);
    if (d1 && d2) return detail::disks_intersect(*d1, *d2);
    if (d1) return detail::disk_meets_halfplane(*d1, std::get<Halfplane>(g2));
    if (d2) return detail::disk_meets_halfplane(*d2, std::get<Halfplane>(g1));
    return detail::halfplanes_intersect(std::get<Halfplane>(g1), std::get<Halfplane>(g2));
}

// Is `inner` contained in `outer`?  Equivalent to dist(centers) + r_in <= r_out,
// decided on squares: R2 >= rho2, and L = d2 - R2 - rho2 <= 0 with L^2 >= 4*R2*rho2.
inline bool disk_contains_disk(const Disk& outer, const Disk& inner) {
    if (outer.r2 < inner.r2) return false;
    const Rat L = dist2(outer.center, inner.center) - outer.r2 - inner.r2;
    if (sign(L) > 0) return false;
    return L * L >= 4 * outer.r2 * inner.r2;
}

inline std::string point_to_string(const Point& p) {
    return "(" + scalar_to_string(p.x) + ", " + scalar_to_string(p.y) + ")";
}

}  // namespace sidedisk
