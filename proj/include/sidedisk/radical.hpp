#pragma once

// Exact arithmetic in real multi-quadratic fields Q(sqrt(b1), ..., sqrt(bm)).
//
// Angle bisectors of rational lines and disks tangent to three rational lines
// have coordinates of the form p + q*sqrt(k) layered at most twice (the two
// radicands are products of squared line norms).  This header provides a
// value type for such numbers:
//
//   * A RadicalBasis fixes pairwise-coprime integer radicals b1..bm, none of
//     them a perfect square.  Under that normalization the 2^m products
//     prod_{i in S} sqrt(bi) are linearly independent over Q, so a value is
//     uniquely a rational coordinate vector indexed by subsets, and the
//     zero test is purely structural.
//   * The basis is produced by gcd factor refinement (no integer factoring):
//     repeatedly replace a pair (a, b) with gcd g > 1 by (a/g, b/g, g) until
//     pairwise coprime, then strip perfect squares into rational multipliers.
//   * sign(): structural zero test first; then exact sign by recursive
//     splitting p + q*sqrt(b) for depth <= 2 (the common case); deeper
//     towers, which only arise when comparing values from different
//     constructions, are separated by interval arithmetic starting at 256
//     bits with doubling precision, falling back to the (always correct,
//     merely slower) recursion if the intervals refuse to separate.

#include <cstdint>
#include <memory>
#include <vector>

#include "sidedisk/bigfloat.hpp"
#include "sidedisk/scalar.hpp"

namespace sidedisk {

class RadicalBasis {
public:
    struct RootForm {
        Rat coeff;       // rational multiplier
        std::uint32_t mask = 0;  // subset of basis radicals under the root
    };

    // Builds the basis for the given radicands (each must be >= 0).
    static std::shared_ptr<const RadicalBasis> make(const std::vector<Rat>& radicands) {
        auto basis = std::make_shared<RadicalBasis>();
        basis->orig_ = radicands;

        // Integerize each radicand: sqrt(p/q) = sqrt(p*q)/q.
        std::vector<Int> ints;
        std::vector<Rat> pre_mult(radicands.size(), Rat(1));
        std::vector<Int> int_radicand(radicands.size());
        for (std::size_t i = 0; i < radicands.size(); ++i) {
            const Rat& k = radicands[i];
            if (sidedisk::sign(k) < 0) throw domain_error("negative radicand");
            Int n = k.get_num() * k.get_den();
            pre_mult[i] = Rat(1, k.get_den());
            int_radicand[i] = n;
            if (sidedisk::sign(n) > 0 && n != 1) ints.push_back(n);
        }

        // gcd factor refinement to a pairwise coprime multiset.
        std::vector<Int> base = std::move(ints);
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < base.size() && !changed; ++i)
                for (std::size_t j = i + 1; j < base.size() && !changed; ++j) {
                    Int g = gcd(base[i], base[j]);
                    if (g > 1) {
                        base[i] /= g;
                        base[j] /= g;
                        base.push_back(g);
                        changed = true;
                    }
                }
            if (changed) {
                std::vector<Int> next;
                for (Int& b : base)
                    if (b > 1) next.push_back(std::move(b));
                base = std::move(next);
            }
        }

        // Strip perfect squares; the rest become radicals of the field.
        std::vector<Int> square_root_of(base.size());  // 0 when not a square
        for (std::size_t i = 0; i < base.size(); ++i) {
            if (mpz_perfect_square_p(base[i].get_mpz_t())) {
                Int r;
                mpz_sqrt(r.get_mpz_t(), base[i].get_mpz_t());
                square_root_of[i] = r;
            } else {
                basis->radicals_.push_back(base[i]);
            }
        }
        if (basis->radicals_.size() > 20) throw domain_error("radical basis too large");

        // Decompose each integer radicand over the refined base.
        basis->roots_.resize(radicands.size());
        for (std::size_t i = 0; i < radicands.size(); ++i) {
            RootForm rf;
            rf.coeff = pre_mult[i];
            Int n = int_radicand[i];
            if (sidedisk::sign(n) == 0) {
                rf.coeff = 0;
                basis->roots_[i] = rf;
                continue;
            }
            std::size_t radical_idx = 0;
            for (std::size_t b = 0; b < base.size(); ++b) {
                unsigned e = 0;
                while (mpz_divisible_p(n.get_mpz_t(), base[b].get_mpz_t())) {
                    n /= base[b];
                    ++e;
                }
                Int contrib = 1;
                if (square_root_of[b] != 0) {
                    // base[b] = s^2: sqrt(base[b]^e) = s^e
                    mpz_pow_ui(contrib.get_mpz_t(), square_root_of[b].get_mpz_t(), e);
                } else {
                    mpz_pow_ui(contrib.get_mpz_t(), base[b].get_mpz_t(), e / 2);
                    if (e % 2) rf.mask |= (1u << radical_idx);
                }
                rf.coeff *= Rat(contrib);
                if (square_root_of[b] == 0) ++radical_idx;
            }
            if (n != 1) throw domain_error("factor refinement failed to absorb a radicand");
            basis->roots_[i] = rf;
        }
        return basis;
    }

    std::size_t num_radicals() const { return radicals_.size(); }
    std::size_t dim() const { return std::size_t{1} << radicals_.size(); }
    const Int& radical(std::size_t i) const { return radicals_[i]; }
    const std::vector<Rat>& original_radicands() const { return orig_; }
    const RootForm& root_of_radicand(std::size_t idx) const { return roots_[idx]; }

    // prod of radicals selected by mask, as a rational.
    Rat subset_product(std::uint32_t mask) const {
        Int p = 1;
        for (std::size_t i = 0; i < radicals_.size(); ++i)
            if (mask & (1u << i)) p *= radicals_[i];
        return Rat(p);
    }

    std::vector<Int> radicals_;
    std::vector<RootForm> roots_;
    std::vector<Rat> orig_;
};

using BasisPtr = std::shared_ptr<const RadicalBasis>;

class AlgScalar {
public:
    AlgScalar() : co_(1, Rat(0)) {}
    AlgScalar(Rat v) : co_(1, std::move(v)) {}
    AlgScalar(long v) : co_(1, Rat(v)) {}
    AlgScalar(const BasisPtr& basis, std::vector<Rat> coords)
        : basis_(basis), co_(std::move(coords)) {}

    // sqrt of the idx-th radicand the basis was built from.
    static AlgScalar sqrt_of_radicand(const BasisPtr& basis, std::size_t idx) {
        const auto& rf = basis->root_of_radicand(idx);
        std::vector<Rat> co(basis->dim(), Rat(0));
        co[rf.mask] = rf.coeff;
        return AlgScalar(basis, std::move(co));
    }

    const BasisPtr& basis() const { return basis_; }
    const std::vector<Rat>& coords() const { return co_; }

    bool is_zero() const {
        for (const Rat& c : co_)
            if (sidedisk::sign(c) != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < co_.size(); ++i)
            if (sidedisk::sign(co_[i]) != 0) return false;
        return true;
    }
    const Rat& rational_value() const {
        if (!is_rational()) throw domain_error("AlgScalar is irrational");
        return co_[0];
    }

    AlgScalar operator-() const {
        std::vector<Rat> co(co_.size());
        for (std::size_t i = 0; i < co_.size(); ++i) co[i] = -co_[i];
        return AlgScalar(basis_, std::move(co));
    }

    friend AlgScalar operator+(const AlgScalar& x, const AlgScalar& y) {
        auto [a, b] = align(x, y);
        std::vector<Rat> co(a.co_.size());
        for (std::size_t i = 0; i < co.size(); ++i) co[i] = a.co_[i] + b.co_[i];
        return AlgScalar(a.basis_, std::move(co));
    }
    friend AlgScalar operator-(const AlgScalar& x, const AlgScalar& y) { return x + (-y); }
    friend AlgScalar operator*(const AlgScalar& x, const AlgScalar& y) {
        auto [a, b] = align(x, y);
        if (!a.basis_) return AlgScalar(a.co_[0] * b.co_[0]);
        std::vector<Rat> co(a.co_.size(), Rat(0));
        for (std::uint32_t s = 0; s < a.co_.size(); ++s) {
            if (sidedisk::sign(a.co_[s]) == 0) continue;
            for (std::uint32_t t = 0; t < b.co_.size(); ++t) {
                if (sidedisk::sign(b.co_[t]) == 0) continue;
                co[s ^ t] += a.co_[s] * b.co_[t] * a.basis_->subset_product(s & t);
            }
        }
        return AlgScalar(a.basis_, std::move(co));
    }
    friend AlgScalar operator/(const AlgScalar& x, const AlgScalar& y) { return x * y.inverse(); }

    AlgScalar inverse() const {
        if (is_zero()) throw domain_error("division by zero AlgScalar");
        if (!basis_ || is_rational()) {
            AlgScalar r(Rat(1) / co_[0]);
            return r;
        }
        std::vector<Rat> co = co_;
        std::vector<Rat> inv = inverse_rec(co, basis_->num_radicals());
        return AlgScalar(basis_, std::move(inv));
    }

    bool operator==(const AlgScalar& o) const { return (*this - o).is_zero(); }
    bool operator!=(const AlgScalar& o) const { return !(*this == o); }

    // Exact sign.  Structural zero test, then recursion for shallow towers,
    // then escalating interval arithmetic with the recursion as final word.
    int sign() const {
        if (is_zero()) return 0;
        if (!basis_ || is_rational()) return sidedisk::sign(co_[0]);
        const std::size_t m = basis_->num_radicals();
        if (m <= 2) return sign_rec(co_, m);
        for (mpfr_prec_t prec = 256; prec <= (mpfr_prec_t(1) << 14); prec *= 2) {
            const int s = to_interval(prec).sign_or_zero_spanning();
            if (s != 0) return s;
        }
        return sign_rec(co_, m);
    }

    Interval to_interval(mpfr_prec_t prec) const {
        Interval acc(prec);
        if (!basis_) return Interval::of(co_[0], prec);
        std::vector<Interval> root(basis_->num_radicals(), Interval(prec));
        for (std::size_t i = 0; i < basis_->num_radicals(); ++i)
            root[i] = Interval::of(Rat(basis_->radical(i)), prec).sqrt();
        for (std::uint32_t s = 0; s < co_.size(); ++s) {
            if (sidedisk::sign(co_[s]) == 0) continue;
            Interval term = Interval::of(co_[s], prec);
            for (std::size_t i = 0; i < basis_->num_radicals(); ++i)
                if (s & (1u << i)) term = term * root[i];
            acc = acc + term;
        }
        return acc;
    }

    double to_double() const { return to_interval(64).lo().to_double(); }

    // Re-express this value over a basis built from a superset of radicands.
    // `radical_index(i)` must give the index, in the new basis' radicand
    // list, of this basis' i-th radical (the integer radical itself).
    AlgScalar rebased(const BasisPtr& nb, const std::vector<std::size_t>& radical_index) const {
        if (!basis_) return AlgScalar(co_[0]);
        AlgScalar acc = AlgScalar(nb, std::vector<Rat>(nb->dim(), Rat(0)));
        for (std::uint32_t s = 0; s < co_.size(); ++s) {
            if (sidedisk::sign(co_[s]) == 0) continue;
            AlgScalar term(co_[s]);
            for (std::size_t i = 0; i < basis_->num_radicals(); ++i)
                if (s & (1u << i))
                    term = term * AlgScalar::sqrt_of_radicand(nb, radical_index[i]);
            acc = acc + term;
        }
        return acc;
    }

private:
    // Promote the pair onto a common basis.  Values from two genuinely
    // different towers are merged by rebuilding a basis over the union of
    // their radicals.
    static std::pair<AlgScalar, AlgScalar> align(const AlgScalar& x, const AlgScalar& y) {
        if (x.basis_ == y.basis_) return {x, y};
        if (!x.basis_) return {promote(x.co_[0], y.basis_), y};
        if (!y.basis_) return {x, promote(y.co_[0], x.basis_)};
        // Merge: radicands = x's radicals then y's radicals.
        std::vector<Rat> rads;
        for (std::size_t i = 0; i < x.basis_->num_radicals(); ++i)
            rads.push_back(Rat(x.basis_->radical(i)));
        for (std::size_t i = 0; i < y.basis_->num_radicals(); ++i)
            rads.push_back(Rat(y.basis_->radical(i)));
        BasisPtr nb = RadicalBasis::make(rads);
        std::vector<std::size_t> xi(x.basis_->num_radicals()), yi(y.basis_->num_radicals());
        for (std::size_t i = 0; i < xi.size(); ++i) xi[i] = i;
        for (std::size_t i = 0; i < yi.size(); ++i) yi[i] = xi.size() + i;
        return {x.rebased(nb, xi), y.rebased(nb, yi)};
    }

    static AlgScalar promote(const Rat& v, const BasisPtr& basis) {
        if (!basis) return AlgScalar(v);
        std::vector<Rat> co(basis->dim(), Rat(0));
        co[0] = v;
        return AlgScalar(basis, std::move(co));
    }

    // Exact sign of a coordinate vector over the first m radicals.
    int sign_rec(const std::vector<Rat>& co, std::size_t m) const {
        if (m == 0) return sidedisk::sign(co[0]);
        const std::size_t half = std::size_t{1} << (m - 1);
        std::vector<Rat> p(co.begin(), co.begin() + half);
        std::vector<Rat> q(co.begin() + half, co.end());
        const int sp = sign_rec(p, m - 1);
        const int sq = sign_rec(q, m - 1);
        if (sq == 0) return sp;
        if (sp == 0) return sq;
        if (sp == sq) return sp;
        // x = p + q*sqrt(b), p and q of opposite signs: sign(x) = sp * sign(p^2 - q^2 b).
        const Rat b(basis_->radical(m - 1));
        std::vector<Rat> disc = mul_sub(p, p, q, q, b, m - 1);
        return sp * sign_rec(disc, m - 1);
    }

    // p1*p2 - b * q1*q2 over the sub-basis of the first m radicals.
    std::vector<Rat> mul_sub(const std::vector<Rat>& p1, const std::vector<Rat>& p2,
                             const std::vector<Rat>& q1, const std::vector<Rat>& q2,
                             const Rat& b, std::size_t m) const {
        std::vector<Rat> out(std::size_t{1} << m, Rat(0));
        auto accumulate = [&](const std::vector<Rat>& u, const std::vector<Rat>& v, const Rat& f) {
            for (std::uint32_t s = 0; s < u.size(); ++s) {
                if (sidedisk::sign(u[s]) == 0) continue;
                for (std::uint32_t t = 0; t < v.size(); ++t) {
                    if (sidedisk::sign(v[t]) == 0) continue;
                    out[s ^ t] += f * u[s] * v[t] * basis_->subset_product(s & t);
                }
            }
        };
        accumulate(p1, p2, Rat(1));
        accumulate(q1, q2, -b);
        return out;
    }

    // Inverse of a coordinate vector over the first m radicals.
    std::vector<Rat> inverse_rec(const std::vector<Rat>& co, std::size_t m) const {
        if (m == 0) {
            if (sidedisk::sign(co[0]) == 0) throw domain_error("division by zero in radical tower");
            return {Rat(1) / co[0]};
        }
        const std::size_t half = std::size_t{1} << (m - 1);
        std::vector<Rat> p(co.begin(), co.begin() + half);
        std::vector<Rat> q(co.begin() + half, co.end());
        bool q_zero = true;
        for (const Rat& c : q)
            if (sidedisk::sign(c) != 0) { q_zero = false; break; }
        if (q_zero) {
            std::vector<Rat> ip = inverse_rec(p, m - 1);
            ip.resize(co.size(), Rat(0));
            return ip;
        }
        // 1/(p + q sqrt(b)) = (p - q sqrt(b)) / (p^2 - q^2 b)
        const Rat b(basis_->radical(m - 1));
        std::vector<Rat> denom = mul_sub(p, p, q, q, b, m - 1);
        std::vector<Rat> idenom = inverse_rec(denom, m - 1);
        // (p - q sqrt(b)) * idenom, distributing over the top radical.
        std::vector<Rat> rp(half, Rat(0)), rq(half, Rat(0));
        auto mul_into = [&](const std::vector<Rat>& u, const std::vector<Rat>& v,
                            std::vector<Rat>& dst, const Rat& f) {
            for (std::uint32_t s = 0; s < u.size(); ++s) {
                if (sidedisk::sign(u[s]) == 0) continue;
                for (std::uint32_t t = 0; t < v.size(); ++t) {
                    if (sidedisk::sign(v[t]) == 0) continue;
                    dst[s ^ t] += f * u[s] * v[t] * basis_->subset_product(s & t);
                }
            }
        };
        mul_into(p, idenom, rp, Rat(1));
        mul_into(q, idenom, rq, Rat(-1));
        std::vector<Rat> out(co.size());
        for (std::size_t i = 0; i < half; ++i) out[i] = rp[i];
        for (std::size_t i = 0; i < half; ++i) out[half + i] = rq[i];
        return out;
    }

    BasisPtr basis_;  // nullptr for plain rationals
    std::vector<Rat> co_;
};

}  // namespace sidedisk
