#pragma once

#include <gmpxx.h>

#include <limits>
#include <string>

namespace braidnorm {

// All areas, weights and bound values are exact rationals.
using Rational = mpq_class;

// gmpxx only overloads up to long; route wider values through mpz.
inline Rational rational_from(long long v) {
  if (v >= std::numeric_limits<long>::min() &&
      v <= std::numeric_limits<long>::max())
    return Rational(static_cast<long>(v));
  return Rational(mpz_class(std::to_string(v)));
}

// Accepts "num/den" or a bare integer, with an optional leading minus sign.
// The result is canonical: positive denominator, gcd(num, den) = 1.
Rational parse_rational(const std::string& text);

// Canonical rendering, denominator always spelled out: "0/1", "-1/6", "2/1".
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace braidnorm
