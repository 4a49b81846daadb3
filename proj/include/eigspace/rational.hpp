#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace eigspace {

// GMP keeps mpq_class values canonical (reduced, positive denominator, 0 == 0/1)
// as long as every constructor from a raw numerator/denominator pair goes
// through make_rational().
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);
inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);

/// Accepts "p", "p/q" and "-p/q" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

/// Binomial coefficient C(n, r) as an exact integer; 0 when r < 0 or r > n.
Integer binomial(long n, long r);

}  // namespace eigspace
