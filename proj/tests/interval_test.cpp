#include <catch2/catch_amalgamated.hpp>

#include "sidedisk/bigfloat.hpp"
#include "sidedisk/prng.hpp"

using namespace sidedisk;

namespace {
bool leq(const BigFloat& a, const BigFloat& b) { return a.cmp(b) <= 0; }
bool encloses(const Interval& outer, const Interval& inner) {
    return leq(outer.lo(), inner.lo()) && leq(inner.hi(), outer.hi());
}
}  // namespace

TEST_CASE("rational conversion brackets the value") {
    Interval third = Interval::of(Rat(1, 3), 64);
    CHECK(third.lo().cmp(third.hi()) < 0);  // 1/3 is not a binary float
    CHECK(third.lo().to_double() < 0.3334);
    CHECK(third.hi().to_double() > 0.3332);
    Interval half = Interval::of(Rat(1, 2), 64);
    CHECK(half.lo().cmp(half.hi()) == 0);  // exactly representable
    CHECK(half.width() == 0.0);
}

TEST_CASE("arithmetic is outward-rounded") {
    const mpfr_prec_t prec = 64;
    Interval a = Interval::of(Rat(1, 3), prec);
    Interval b = Interval::of(Rat(1, 7), prec);
    // 1/3 + 1/7 = 10/21, 1/3 - 1/7 = 4/21, (1/3)*(1/7) = 1/21, (1/3)/(1/7) = 7/3
    CHECK(encloses(a + b, Interval::of(Rat(10, 21), 256)));
    CHECK(encloses(a - b, Interval::of(Rat(4, 21), 256)));
    CHECK(encloses(a * b, Interval::of(Rat(1, 21), 256)));
    CHECK(encloses(a / b, Interval::of(Rat(7, 3), 256)));
    CHECK(encloses(-a, Interval::of(Rat(-1, 3), 256)));

    // Signed multiplication corner cases.
    Interval m = Interval::of(Rat(-2), prec);
    CHECK(encloses(a * m, Interval::of(Rat(-2, 3), 256)));
    CHECK((a - a).contains_zero());
    CHECK_THROWS_AS(a / (a - a), domain_error);
}

TEST_CASE("sqrt encloses and rejects possibly-negative input") {
    Interval two = Interval::of_long(2, 128);
    Interval r = two.sqrt();
    CHECK((r * r - two).contains_zero());
    CHECK(r.lo().to_double() < 1.41421357);
    CHECK(r.hi().to_double() > 1.41421356);
    CHECK(r.width() < 1e-35);
    CHECK_THROWS_AS(Interval::of(Rat(-1), 64).sqrt(), domain_error);
    Interval zero = Interval::of(Rat(0), 64);
    CHECK(zero.sqrt().contains_zero());
}

TEST_CASE("pi brackets the constant") {
    Interval p = Interval::pi(128);
    CHECK(p.lo().cmp(p.hi()) < 0);
    CHECK(p.lo().to_double() > 3.141592);
    CHECK(p.hi().to_double() < 3.141593);
    CHECK(p.width() < 1e-30);
}

TEST_CASE("sine widens across its extrema") {
    const mpfr_prec_t prec = 128;
    Interval half_pi = Interval::pi(prec) / Interval::of_long(2, prec);
    // The interval spans pi/2, so the enclosure must reach exactly 1.
    Interval s = half_pi.sin();
    CHECK(mpfr_cmp_si(s.hi().get(), 1) == 0);
    CHECK(s.lo().to_double() > 0.999);
    // Same across -pi/2.
    Interval sneg = (-half_pi).sin();
    CHECK(mpfr_cmp_si(sneg.lo().get(), -1) == 0);

    // Monotone stretch: sin is increasing on [0, 1/2], endpoints tight.
    Interval m = Interval::of_range(Rat(0), Rat(1, 2), prec).sin();
    CHECK(m.lo().sgn() == 0);  // sin(0) = 0 exactly
    CHECK(m.hi().to_double() > 0.4794);
    CHECK(m.hi().to_double() < 0.4795);
}

TEST_CASE("cosine widens across zero") {
    const mpfr_prec_t prec = 128;
    // A narrow interval straddling the maximum at 0: upper bound must be 1.
    Interval c = Interval::of_range(Rat(-1, 100), Rat(1, 100), prec).cos();
    CHECK(mpfr_cmp_si(c.hi().get(), 1) == 0);
    CHECK(c.lo().to_double() > 0.9999);
    // Strictly monotone stretch keeps endpoints close.
    Interval c2 = Interval::of_range(Rat(1, 2), Rat(3, 4), prec).cos();
    CHECK(c2.lo().to_double() > 0.731);
    CHECK(c2.hi().to_double() < 0.878);
}

TEST_CASE("trig containment property on random small intervals") {
    const mpfr_prec_t prec = 96;
    SplitMix64 g{5150};
    for (int i = 0; i < 200; ++i) {
        Rat a = g.next_rat(-2, 2, 64);
        Rat w = g.next_pos_rat(1, 32);  // width up to 1
        Rat b = a + w;
        if (b > 2) continue;
        Interval hull = Interval::of_range(a, b, prec);
        Interval sh = hull.sin();
        Interval ch = hull.cos();
        for (int k = 0; k <= 4; ++k) {
            Rat t = a + (b - a) * Rat(k, 4);
            Interval st = Interval::of(t, prec).sin();
            Interval ct = Interval::of(t, prec).cos();
            CHECK(encloses(sh, st));
            CHECK(encloses(ch, ct));
        }
    }
}

TEST_CASE("tangent on the principal branch") {
    const mpfr_prec_t prec = 128;
    Interval x = Interval::of(Rat(1, 4), prec);
    Interval t = x.tan();
    // tan(1/4) = 0.25534192122103627...; both enclosures must overlap it.
    CHECK(t.lo().to_double() < 0.2553420);
    CHECK(t.hi().to_double() > 0.2553419);
    Interval s = x.sin(), c = x.cos();
    Interval q = s / c;
    CHECK((t - q).contains_zero());
    // Interval touching pi/2 must be rejected.
    Interval too_big = Interval::pi(prec) / Interval::of_long(2, prec);
    CHECK_THROWS_AS(too_big.tan(), domain_error);
}

TEST_CASE("sign queries") {
    CHECK(Interval::of(Rat(3, 7), 64).sign_or_zero_spanning() == 1);
    CHECK(Interval::of(Rat(-3, 7), 64).sign_or_zero_spanning() == -1);
    Interval spanning = Interval::of(Rat(1, 3), 64) - Interval::of(Rat(1, 3), 64);
    CHECK(spanning.sign_or_zero_spanning() == 0);
    CHECK(spanning.contains_zero());
}

TEST_CASE("arguments outside the supported trig range are rejected") {
    CHECK_THROWS_AS(Interval::of(Rat(3), 64).sin(), domain_error);
    CHECK_THROWS_AS(Interval::of(Rat(-5, 2), 64).cos(), domain_error);
}
