#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hurwitz {

using Integer = mpz_class;
using Rational = mpq_class;

/// Serializes as "num/den" with a positive denominator, always including the
/// denominator ("8/1", "-3/2", "0/1").
std::string to_string(const Rational& q);

/// Accepts "num/den" or a bare integer. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Exact power; negative exponents invert. Throws std::domain_error on 0^-k.
Rational pow(const Rational& base, int exponent);

Integer factorial(unsigned n);

/// Canonicalized num/den.
inline Rational frac(long num, long den)
{
  Rational q{Integer(num), Integer(den)};
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

} // namespace hurwitz
