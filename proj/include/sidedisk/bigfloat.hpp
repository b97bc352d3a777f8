#pragma once

// Thin RAII wrapper over MPFR plus a directed-rounding interval type.
//
// The interval type is the workhorse for every claim of the form
// "this inequality holds at 50-digit precision": each elementary operation
// rounds the lower endpoint down and the upper endpoint up, so an interval
// that ends up entirely on one side of zero is a machine-checked certificate
// of the sign.  Callers escalate precision until the interval separates, and
// use exact arithmetic to recognize genuine zeros first.

#include <mpfr.h>

#include <string>
#include <utility>

#include "sidedisk/scalar.hpp"

namespace sidedisk {

class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 256) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigFloat(const Rat& q, mpfr_prec_t prec, mpfr_rnd_t rnd) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, q.get_mpq_t(), rnd);
    }
    BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, 2); mpfr_swap(v_, o.v_); }
    BigFloat& operator=(BigFloat o) { mpfr_swap(v_, o.v_); return *this; }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    int sgn() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Decimal string with `digits` significant digits, round-to-nearest.
    std::string to_string(std::size_t digits) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

private:
    mpfr_t v_;
};

// Closed interval [lo, hi] with outward rounding at precision `prec`.
class Interval {
public:
    explicit Interval(mpfr_prec_t prec = 256) : lo_(prec), hi_(prec), prec_(prec) {}

    static Interval of(const Rat& q, mpfr_prec_t prec) {
        Interval r(prec);
        mpfr_set_q(r.lo_.get(), q.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(r.hi_.get(), q.get_mpq_t(), MPFR_RNDU);
        return r;
    }
    static Interval of_long(long v, mpfr_prec_t prec) {
        Interval r(prec);
        mpfr_set_si(r.lo_.get(), v, MPFR_RNDD);
        mpfr_set_si(r.hi_.get(), v, MPFR_RNDU);
        return r;
    }
    static Interval pi(mpfr_prec_t prec) {
        Interval r(prec);
        mpfr_const_pi(r.lo_.get(), MPFR_RNDD);
        mpfr_const_pi(r.hi_.get(), MPFR_RNDU);
        return r;
    }
    // The interval [a, b] itself (outward-rounded endpoints).
    static Interval of_range(const Rat& a, const Rat& b, mpfr_prec_t prec) {
        if (a > b) throw domain_error("of_range: empty interval");
        Interval r(prec);
        mpfr_set_q(r.lo_.get(), a.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(r.hi_.get(), b.get_mpq_t(), MPFR_RNDU);
        return r;
    }

    const BigFloat& lo() const { return lo_; }
    const BigFloat& hi() const { return hi_; }
    mpfr_prec_t prec() const { return prec_; }

    Interval operator+(const Interval& o) const {
        Interval r(prec_);
        mpfr_add(r.lo_.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
        mpfr_add(r.hi_.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
        return r;
    }
    Interval operator-(const Interval& o) const {
        Interval r(prec_);
        mpfr_sub(r.lo_.get(), lo_.get(), o.hi_.get(), MPFR_RNDD);
        mpfr_sub(r.hi_.get(), hi_.get(), o.lo_.get(), MPFR_RNDU);
        return r;
    }
    Interval operator-() const {
        Interval r(prec_);
        mpfr_neg(r.lo_.get(), hi_.get(), MPFR_RNDD);
        mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
        return r;
    }
    Interval operator*(const Interval& o) const {
        Interval r(prec_);
        BigFloat cand(prec_), best_lo(prec_), best_hi(prec_);
        bool first = true;
        const BigFloat* xs[2] = {&lo_, &hi_};
        const BigFloat* ys[2] = {&o.lo_, &o.hi_};
        for (const BigFloat* x : xs)
            for (const BigFloat* y : ys) {
                mpfr_mul(cand.get(), x->get(), y->get(), MPFR_RNDD);
                if (first || mpfr_cmp(cand.get(), best_lo.get()) < 0)
                    mpfr_set(best_lo.get(), cand.get(), MPFR_RNDD);
                mpfr_mul(cand.get(), x->get(), y->get(), MPFR_RNDU);
                if (first || mpfr_cmp(cand.get(), best_hi.get()) > 0)
                    mpfr_set(best_hi.get(), cand.get(), MPFR_RNDU);
                first = false;
            }
        r.lo_ = best_lo;
        r.hi_ = best_hi;
        return r;
    }
    Interval operator/(const Interval& o) const {
        if (mpfr_sgn(o.lo_.get()) <= 0 && mpfr_sgn(o.hi_.get()) >= 0)
            throw domain_error("interval division by an interval containing zero");
        Interval r(prec_);
        BigFloat cand(prec_), best_lo(prec_), best_hi(prec_);
        bool first = true;
        const BigFloat* xs[2] = {&lo_, &hi_};
        const BigFloat* ys[2] = {&o.lo_, &o.hi_};
        for (const BigFloat* x : xs)
            for (const BigFloat* y : ys) {
                mpfr_div(cand.get(), x->get(), y->get(), MPFR_RNDD);
                if (first || mpfr_cmp(cand.get(), best_lo.get()) < 0)
                    mpfr_set(best_lo.get(), cand.get(), MPFR_RNDD);
                mpfr_div(cand.get(), x->get(), y->get(), MPFR_RNDU);
                if (first || mpfr_cmp(cand.get(), best_hi.get()) > 0)
                    mpfr_set(best_hi.get(), cand.get(), MPFR_RNDU);
                first = false;
            }
        r.lo_ = best_lo;
        r.hi_ = best_hi;
        return r;
    }

    Interval sqrt() const {
        if (mpfr_sgn(lo_.get()) < 0) throw domain_error("interval sqrt of a possibly-negative value");
        Interval r(prec_);
        mpfr_sqrt(r.lo_.get(), lo_.get(), MPFR_RNDD);
        mpfr_sqrt(r.hi_.get(), hi_.get(), MPFR_RNDU);
        return r;
    }

    // sin/cos/tan restricted to arguments in [-2, 2].  On that window sin has
    // its only extrema at +-pi/2 and cos its only extremum at 0, so the exact
    // range is the endpoint envelope, widened to +-1 when the corresponding
    // extremum may lie inside the argument interval.  That covers every trig
    // expression appearing in the verified inequality chains, whose
    // parameters all live inside (0, pi/2).
    Interval sin() const {
        require_small_arg();
        const BigFloat half_pi_lo = half_pi(MPFR_RNDD);
        Interval r(prec_);
        BigFloat a(prec_), b(prec_), c(prec_), d(prec_);
        mpfr_sin(a.get(), lo_.get(), MPFR_RNDD);
        mpfr_sin(b.get(), lo_.get(), MPFR_RNDU);
        mpfr_sin(c.get(), hi_.get(), MPFR_RNDD);
        mpfr_sin(d.get(), hi_.get(), MPFR_RNDU);
        mpfr_min(r.lo_.get(), a.get(), c.get(), MPFR_RNDD);
        mpfr_max(r.hi_.get(), b.get(), d.get(), MPFR_RNDU);
        BigFloat neg_half_pi_lo(prec_);
        mpfr_neg(neg_half_pi_lo.get(), half_pi_lo.get(), MPFR_RNDU);
        if (mpfr_cmp(lo_.get(), neg_half_pi_lo.get()) <= 0)
            mpfr_set_si(r.lo_.get(), -1, MPFR_RNDD);  // may contain -pi/2
        if (mpfr_cmp(hi_.get(), half_pi_lo.get()) >= 0)
            mpfr_set_si(r.hi_.get(), 1, MPFR_RNDU);  // may contain +pi/2
        return r;
    }
    Interval cos() const {
        require_small_arg();
        Interval r(prec_);
        BigFloat a(prec_), b(prec_), c(prec_), d(prec_);
        mpfr_cos(a.get(), lo_.get(), MPFR_RNDD);
        mpfr_cos(b.get(), lo_.get(), MPFR_RNDU);
        mpfr_cos(c.get(), hi_.get(), MPFR_RNDD);
        mpfr_cos(d.get(), hi_.get(), MPFR_RNDU);
        mpfr_min(r.lo_.get(), a.get(), c.get(), MPFR_RNDD);
        mpfr_max(r.hi_.get(), b.get(), d.get(), MPFR_RNDU);
        if (mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0)
            mpfr_set_si(r.hi_.get(), 1, MPFR_RNDU);  // contains the maximum at 0
        return r;
    }
    Interval tan() const {
        const BigFloat half_pi_lo = half_pi(MPFR_RNDD);
        BigFloat neg_half_pi_lo(prec_);
        mpfr_neg(neg_half_pi_lo.get(), half_pi_lo.get(), MPFR_RNDU);
        if (mpfr_cmp(lo_.get(), neg_half_pi_lo.get()) < 0 ||
            mpfr_cmp(hi_.get(), half_pi_lo.get()) > 0)
            throw domain_error("interval tan outside the principal branch");
        Interval r(prec_);
        mpfr_tan(r.lo_.get(), lo_.get(), MPFR_RNDD);
        mpfr_tan(r.hi_.get(), hi_.get(), MPFR_RNDU);
        return r;
    }

    int sign_or_zero_spanning() const {
        if (mpfr_sgn(lo_.get()) > 0) return +1;
        if (mpfr_sgn(hi_.get()) < 0) return -1;
        return 0;
    }

    bool contains_zero() const { return sign_or_zero_spanning() == 0; }

    // Width as double, for diagnostics only.
    double width() const {
        BigFloat w(prec_);
        mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
        return w.to_double();
    }

private:
    BigFloat half_pi(mpfr_rnd_t rnd) const {
        BigFloat q(prec_);
        mpfr_const_pi(q.get(), rnd);
        mpfr_div_si(q.get(), q.get(), 2, rnd);
        return q;
    }

    void require_small_arg() const {
        if (mpfr_cmp_si(hi_.get(), 2) > 0 || mpfr_cmp_si(lo_.get(), -2) < 0)
            throw domain_error("interval trig argument outside [-2, 2]");
    }

    BigFloat lo_, hi_;
    mpfr_prec_t prec_;
};

}  // namespace sidedisk
