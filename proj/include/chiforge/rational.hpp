#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace chiforge {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Accepts "p/q", "p", or a finite decimal such as "2.8" or "-0.25".
Rational parse_rational(std::string_view s);
// Always "p/q" with q >= 1, so integers print as "3/1".
std::string to_string(const Rational& r);

Rational pow(const Rational& base, long e);
Rational pow2(long e);  // 2^e, e may be negative

Int floor(const Rational& r);
Int ceil(const Rational& r);

// Sign of u^q - v^p for u, v > 0 and q > 0: compares u with v^(p/q).
int compare_root(const Rational& u, const Rational& v, long p, long q);

// Least integer m >= 0 with m >= v^(p/q) (v > 0, q > 0). Used to turn a
// threshold with a fractional exponent into an exact integer bound on χ.
Int ceil_root(const Rational& v, long p, long q);
// Greatest integer m with m <= v^(p/q).
Int floor_root(const Rational& v, long p, long q);

// Sign of m - base^e for m >= 0, base > 0 and e a possibly huge
// non-negative integer, without materialising base^e.
int compare_with_power(const Int& m, const Rational& base, const Int& e);

// c0 + c1 * base^(p/q) with base > 0 and q > 0. Thresholds such as
// (1 - 3y^(1/2))·χ(G) or k^(-d)·χ(G) are kept in this form and only ever
// compared against integers, so no rounding is involved.
struct Threshold {
    Rational c0 = 0, c1 = 0, base = 1;
    Int p = 0;
    long q = 1;

    static Threshold constant(const Rational& c) { return Threshold{c, 0, 1, 0, 1}; }
    static Threshold power(const Rational& coef, const Rational& base, const Int& p, long q = 1,
                           const Rational& c0 = 0) {
        return Threshold{c0, coef, base, p, q};
    }
    bool is_constant() const { return c1 == 0 || p == 0; }
    // Value when is_constant().
    Rational constant_value() const { return c1 == 0 || p != 0 ? c0 : c0 + c1; }
    Threshold scaled(const Rational& m) const { return Threshold{c0 * m, c1 * m, base, p, q}; }
};

// Sign of u^q - base^p for u > 0 (huge |p| handled without expansion when
// base is an integer or the reciprocal of one).
int compare_power(const Rational& u, const Rational& base, const Int& p, long q);
// Sign of m - t for an integer m.
int compare(const Int& m, const Threshold& t);
// Least integer >= t and greatest integer <= t.
Int ceil(const Threshold& t);
Int floor(const Threshold& t);
std::string to_string(const Threshold& t);

}  // namespace chiforge
