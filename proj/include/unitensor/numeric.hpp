#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace unitensor {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& r) { return r.get_str(); }

// Möbius function, trial division.
int moebius(int n);

}  // namespace unitensor
