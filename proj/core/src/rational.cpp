#include "hurwitz/rational.hpp"

#include <stdexcept>

namespace hurwitz {

std::string to_string(const Rational& q)
{
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(std::string_view text)
{
  std::string s(text);
  if (s.empty())
    throw std::invalid_argument("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw std::invalid_argument("malformed rational literal: " + s);
  q.canonicalize();
  return q;
}

Rational pow(const Rational& base, int exponent)
{
  if (exponent < 0) {
    if (base == 0)
      throw std::domain_error("zero raised to a negative power");
    Rational inv = 1 / base;
    return pow(inv, -exponent);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Integer factorial(unsigned n)
{
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

} // namespace hurwitz
