#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace mshopf {

// Exact rational scalar. All algebraic identities in this library are tested
// with zero tolerance, so every coefficient is an arbitrary-precision rational.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline std::string num_string(const Rational& r) { return r.get_num().get_str(); }
inline std::string den_string(const Rational& r) { return r.get_den().get_str(); }

// "p/q" with q omitted when 1; used in text reports.
inline std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

// (2m-1)!! = 1*3*5*...*(2m-1); number of perfect matchings of 2m points.
inline Rational double_factorial_odd(unsigned m) {
    Rational r = 1;
    for (unsigned k = 1; k <= m; ++k) r *= 2 * k - 1;
    return r;
}

} // namespace mshopf
