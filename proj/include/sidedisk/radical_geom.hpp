#pragma once

// Geometry whose coordinates live in quadratic radical towers: angle
// bisectors of rational lines and the disk tangent to three rational lines.
//
// For oriented lines l1, l2 with normal norms N1, N2, the locus of points at
// equal signed distance is  N2*l1 - sqrt(N1*N2)*l2 = 0  -- one radical.  The
// disk tangent to three lines a, b, c is centered at the intersection of the
// (a,b) and (b,c) bisectors, so its coordinates need only the two radicals
// sqrt(Na*Nb) and sqrt(Nb*Nc); its squared radius stays in the same field.

#include <utility>
#include <vector>

#include "sidedisk/geom.hpp"
#include "sidedisk/radical.hpp"
#include "sidedisk/scalar.hpp"

namespace sidedisk {

struct APoint {
    AlgScalar x;
    AlgScalar y;
};

inline APoint to_apoint(const Point& p) { return APoint{AlgScalar(p.x), AlgScalar(p.y)}; }

inline AlgScalar alg_dist2(const APoint& p, const APoint& q) {
    AlgScalar dx = p.x - q.x, dy = p.y - q.y;
    return dx * dx + dy * dy;
}
inline AlgScalar alg_dist2(const APoint& p, const Point& q) { return alg_dist2(p, to_apoint(q)); }

// a*x + b*y + c = 0 with radical coefficients.
struct RLine {
    AlgScalar a, b, c;

    AlgScalar eval(const APoint& p) const { return a * p.x + b * p.y + c; }
    AlgScalar eval(const Point& p) const { return a * AlgScalar(p.x) + b * AlgScalar(p.y) + c; }
};

inline AlgScalar eval_line(const Line& l, const APoint& p) {
    return AlgScalar(l.a) * p.x + AlgScalar(l.b) * p.y + AlgScalar(l.c);
}

// Squared distance from a radical point to a rational line.
inline AlgScalar alg_dist2_point_line(const APoint& p, const Line& l) {
    AlgScalar e = eval_line(l, p);
    return e * e / AlgScalar(l.norm2());
}

// Orthogonal projection of a radical point onto a rational line.
inline APoint foot_on_line(const APoint& p, const Line& l) {
    AlgScalar t = eval_line(l, p) / AlgScalar(l.norm2());
    return APoint{p.x - t * AlgScalar(l.a), p.y - t * AlgScalar(l.b)};
}

namespace detail {

// Bisector of the wedge of positive sides, given sqrt(N1*N2) over a shared
// basis.  Both lines must already be oriented positive at the region of
// interest.  For facing parallel lines the bisector is the rational midline.
inline RLine bisector_oriented(const Line& l1, const Line& l2, const AlgScalar& sqrt_n1n2) {
    if (l1.parallel_to(l2)) {
        // l2's normal = t * l1's normal, t rational and nonzero.
        const Rat t = (sign(l1.a) != 0) ? (l2.a / l1.a) : (l2.b / l1.b);
        if (sign(t) > 0)
            throw domain_error("parallel lines oriented the same way have no bisector");
        // |t|*eval1 = eval2 with |t| = -t:
        //   (-t*a1 - a2) x + (-t*b1 - b2) y + (-t*c1 - c2) = 0, normal = -2t * n1.
        return RLine{AlgScalar(-t * l1.a - l2.a), AlgScalar(-t * l1.b - l2.b),
                     AlgScalar(-t * l1.c - l2.c)};
    }
    const AlgScalar n2{Rat(l2.norm2())};
    return RLine{n2 * AlgScalar(l1.a) - sqrt_n1n2 * AlgScalar(l2.a),
                 n2 * AlgScalar(l1.b) - sqrt_n1n2 * AlgScalar(l2.b),
                 n2 * AlgScalar(l1.c) - sqrt_n1n2 * AlgScalar(l2.c)};
}

inline Line oriented_positive_at(Line l, const Point& hint) {
    const int s = sign(l.eval(hint));
    if (s == 0) throw domain_error("hint point lies on a bounding line");
    return s > 0 ? l : l.flipped();
}

}  // namespace detail

// Bisector of the wedge that contains `hint`, i.e. the locus of points at
// equal signed distance from both lines when each is oriented toward hint.
inline RLine internal_bisector(Line l1, Line l2, const Point& hint) {
    l1 = detail::oriented_positive_at(l1, hint);
    l2 = detail::oriented_positive_at(l2, hint);
    if (l1.parallel_to(l2))
        return detail::bisector_oriented(l1, l2, AlgScalar(Rat(0)));
    BasisPtr basis = RadicalBasis::make({l1.norm2() * l2.norm2()});
    return detail::bisector_oriented(l1, l2, AlgScalar::sqrt_of_radicand(basis, 0));
}

// Disk with radical center; only the squared radius is stored (the radius
// itself may need a deeper tower, while every predicate used here is
// expressible in squares).
struct RDisk {
    APoint center;
    AlgScalar r2;
};

// The disk tangent to all three lines whose center sees every line's
// `hint` side.  Throws domain_error when no such disk exists (concurrent or
// same-facing parallel lines, hint on a line).
inline RDisk tri_tangent_disk(Line la, Line lb, Line lc, const Point& hint) {
    la = detail::oriented_positive_at(la, hint);
    lb = detail::oriented_positive_at(lb, hint);
    lc = detail::oriented_positive_at(lc, hint);

    const Rat na = la.norm2(), nb = lb.norm2(), nc = lc.norm2();
    BasisPtr basis = RadicalBasis::make({na * nb, nb * nc});
    RLine bis_ab = detail::bisector_oriented(la, lb, AlgScalar::sqrt_of_radicand(basis, 0));
    RLine bis_bc = detail::bisector_oriented(lb, lc, AlgScalar::sqrt_of_radicand(basis, 1));

    AlgScalar det = bis_ab.a * bis_bc.b - bis_bc.a * bis_ab.b;
    if (det.sign() == 0) throw domain_error("lines do not bound a tangent disk");
    APoint center{(bis_ab.b * bis_bc.c - bis_bc.b * bis_ab.c) / det,
                  (bis_bc.a * bis_ab.c - bis_ab.a * bis_bc.c) / det};

    AlgScalar ea = eval_line(la, center);
    if (ea.sign() <= 0 || eval_line(lb, center).sign() <= 0 || eval_line(lc, center).sign() <= 0)
        throw domain_error("tangent disk center is outside the admissible wedge");
    return RDisk{std::move(center), ea * ea / AlgScalar(na)};
}

// --- squared-form predicates -------------------------------------------
//
// All disk relations reduce to comparing sums of square roots, which the
// usual two squaring passes turn into sign tests inside the tower.

// sqrt(x) + sqrt(y) <= sqrt(z), all arguments nonnegative.
inline bool alg_sum_roots_at_most(const AlgScalar& z, const AlgScalar& x, const AlgScalar& y) {
    AlgScalar l = z - x - y;
    if (l.sign() < 0) return false;
    return (l * l - AlgScalar(Rat(4)) * x * y).sign() >= 0;
}

// sqrt(x) + sqrt(y) >= sqrt(z), all arguments nonnegative.
inline bool alg_sum_roots_at_least(const AlgScalar& z, const AlgScalar& x, const AlgScalar& y) {
    AlgScalar l = z - x - y;
    if (l.sign() <= 0) return true;
    return (l * l - AlgScalar(Rat(4)) * x * y).sign() <= 0;
}

inline bool rdisk_contains_point(const RDisk& d, const Point& p) {
    return (alg_dist2(d.center, p) - d.r2).sign() <= 0;
}

// Closed containment of the radical disk in a rational disk.
inline bool disk_contains_rdisk(const Disk& outer, const RDisk& inner) {
    AlgScalar d2 = alg_dist2(inner.center, outer.center);
    return alg_sum_roots_at_most(AlgScalar(outer.r2), d2, inner.r2);
}

// Closed containment of the radical disk in a halfplane.
inline bool halfplane_contains_rdisk(const Halfplane& h, const RDisk& inner) {
    AlgScalar e = AlgScalar(Rat(h.inside_sign)) * eval_line(h.boundary, inner.center);
    if (e.sign() < 0) return false;
    return (e * e - inner.r2 * AlgScalar(h.boundary.norm2())).sign() >= 0;
}

inline bool gdisk_contains_rdisk(const GDisk& outer, const RDisk& inner) {
    if (std::holds_alternative<Disk>(outer))
        return disk_contains_rdisk(std::get<Disk>(outer), inner);
    return halfplane_contains_rdisk(std::get<Halfplane>(outer), inner);
}

// Does the radical disk touch the rational line, exactly?
inline bool rdisk_tangent_to_line(const RDisk& d, const Line& l) {
    AlgScalar e = eval_line(l, d.center);
    return (e * e - d.r2 * AlgScalar(l.norm2())).sign() == 0;
}

}  // namespace sidedisk
