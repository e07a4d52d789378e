#include "hurwitz/exp_laurent.hpp"

namespace hurwitz {

LaurentPoly LaurentPoly::monomial(int exponent, const Rational& c)
{
  LaurentPoly out;
  out.add_term(exponent, c);
  return out;
}

Rational LaurentPoly::coefficient(int exponent) const
{
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(int exponent, const Rational& c)
{
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
  for (const auto& [j, c] : o.terms_)
    add_term(j, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
  for (const auto& [j, c] : o.terms_)
    add_term(j, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& s)
{
  if (s == 0)
    terms_.clear();
  for (auto& [j, c] : terms_)
    c *= s;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
  LaurentPoly out;
  for (const auto& [i, ca] : a.terms_)
    for (const auto& [j, cb] : b.terms_)
      out.add_term(i + j, ca * cb);
  return out;
}

LaurentPoly LaurentPoly::derivative() const
{
  LaurentPoly out;
  for (const auto& [j, c] : terms_)
    out.add_term(j - 1, c * j);
  return out;
}

LaurentPoly LaurentPoly::shifted(int k) const
{
  LaurentPoly out;
  for (const auto& [j, c] : terms_)
    out.terms_.emplace(j + k, c);
  return out;
}

LaurentPoly LaurentPoly::truncated(int max_exponent) const
{
  LaurentPoly out;
  for (const auto& [j, c] : terms_)
    if (j <= max_exponent)
      out.terms_.emplace(j, c);
  return out;
}

ExpLaurent::ExpLaurent(const Rational& c)
{
  add(0, LaurentPoly::monomial(0, c));
}

ExpLaurent ExpLaurent::basis(int j, const Rational& a, const Rational& c)
{
  ExpLaurent out;
  out.add(a, LaurentPoly::monomial(j, c));
  return out;
}

void ExpLaurent::add(const Rational& a, const LaurentPoly& q)
{
  if (q.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(a, q);
  if (!inserted) {
    it->second += q;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

ExpLaurent& ExpLaurent::operator+=(const ExpLaurent& o)
{
  for (const auto& [a, q] : o.terms_)
    add(a, q);
  return *this;
}

ExpLaurent& ExpLaurent::operator-=(const ExpLaurent& o)
{
  for (const auto& [a, q] : o.terms_)
    add(a, q * Rational(-1));
  return *this;
}

ExpLaurent& ExpLaurent::operator*=(const Rational& s)
{
  if (s == 0)
    terms_.clear();
  for (auto& [a, q] : terms_)
    q *= s;
  return *this;
}

ExpLaurent operator*(const ExpLaurent& x, const ExpLaurent& y)
{
  ExpLaurent out;
  for (const auto& [a, p] : x.terms_)
    for (const auto& [b, q] : y.terms_)
      out.add(a + b, p * q);
  return out;
}

ExpLaurent ExpLaurent::derivative() const
{
  ExpLaurent out;
  for (const auto& [a, q] : terms_)
    out.add(a, q.derivative() + q * a);
  return out;
}

ExpLaurent ExpLaurent::times_hbar(int k) const
{
  ExpLaurent out;
  for (const auto& [a, q] : terms_)
    out.terms_.emplace(a, q.shifted(k));
  return out;
}

ExpLaurent ExpLaurent::times_exp(const Rational& s) const
{
  ExpLaurent out;
  for (const auto& [a, q] : terms_)
    out.terms_.emplace(a + s, q);
  return out;
}

LaurentPoly ExpLaurent::expand(int max_exponent) const
{
  LaurentPoly out;
  for (const auto& [a, q] : terms_)
    for (const auto& [j, c] : q.terms()) {
      // e^{a h} = sum_k a^k h^k / k!
      Rational term = c;
      for (int k = 0; j + k <= max_exponent; ++k) {
        out.add_term(j + k, term);
        if (a == 0)
          break;
        term *= a;
        term /= k + 1;
      }
    }
  return out;
}

std::string to_string(const LaurentPoly& q)
{
  std::string out;
  for (const auto& [j, c] : q.terms()) {
    if (!out.empty())
      out += " + ";
    out += c.get_str();
    if (j != 0)
      out += "*h^" + (j < 0 ? "(" + std::to_string(j) + ")" : std::to_string(j));
  }
  return out.empty() ? "0" : out;
}

std::string to_string(const ExpLaurent& f)
{
  std::string out;
  for (const auto& [a, q] : f.terms()) {
    if (!out.empty())
      out += " + ";
    out += "(" + to_string(q) + ")";
    if (a != 0)
      out += "*e^(" + a.get_str() + "*h)";
  }
  return out.empty() ? "0" : out;
}

} // namespace hurwitz
