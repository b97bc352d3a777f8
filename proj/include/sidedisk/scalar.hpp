#pragma once

// Exact scalar type used throughout: arbitrary-precision rationals (GMP).
// All geometric predicates in this library are decided exactly on Rat;
// floating point only ever appears as an explicitly labelled screening or
// rendering aid.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sidedisk {

using Rat = mpq_class;
using Int = mpz_class;

// Error raised for malformed user input (bad JSON, invalid polygon, bad
// flags).  The CLI maps it to exit code 2.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Error raised when an operation's precondition is violated (query point
// strictly inside a disk, degenerate tangency, ...).
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

inline int sign(const Rat& v) { return sgn(v); }
inline int sign(const Int& v) { return sgn(v); }

inline Rat sqr(const Rat& v) { return v * v; }

// Parses "p/q", "-12", "3.25" (exact decimal) into a rational.
inline Rat parse_scalar(const std::string& text) {
    if (text.empty()) throw input_error("empty scalar literal");
    const auto slash = text.find('/');
    const auto dot = text.find('.');
    if (slash != std::string::npos && dot != std::string::npos)
        throw input_error("scalar may be decimal or fraction, not both: " + text);
    try {
        if (slash != std::string::npos) {
            Rat v(text);
            if (v.get_den() == 0) throw input_error("zero denominator: " + text);
            v.canonicalize();
            return v;
        }
        if (dot != std::string::npos) {
            std::string digits = text.substr(0, dot) + text.substr(dot + 1);
            const std::size_t frac_len = text.size() - dot - 1;
            if (frac_len == 0) throw input_error("trailing decimal point: " + text);
            Int num(digits, 10);
            Int den;
            mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
            Rat v(num, den);
            v.canonicalize();
            return v;
        }
        return Rat(Int(text, 10));
    } catch (const std::invalid_argument&) {
        throw input_error("malformed scalar literal: " + text);
    }
}

// Canonical serialization: integer when the denominator is 1, "p/q" otherwise.
inline std::string scalar_to_string(const Rat& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

inline double to_double(const Rat& v) { return v.get_d(); }

// True iff v = s^2 for a rational s; when true and root != nullptr, *root = s >= 0.
inline bool is_perfect_square(const Rat& v, Rat* root = nullptr) {
    if (sign(v) < 0) return false;
    const Int& num = v.get_num();
    const Int& den = v.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    if (root) {
        Int rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        *root = Rat(rn, rd);
    }
    return true;
}

}  // namespace sidedisk
