#include "hurwitz/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hurwitz {

namespace {

int weight(const MultiPoly::Exponents& e)
{
  return std::accumulate(e.begin(), e.end(), 0);
}

} // namespace

Rational MultiPoly::coefficient(const Exponents& e) const
{
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c)
{
  if (static_cast<int>(e.size()) != n_)
    throw std::invalid_argument("exponent vector has wrong length");
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

int MultiPoly::total_degree() const
{
  int d = -1;
  for (const auto& [e, c] : terms_)
    d = std::max(d, weight(e));
  return d;
}

MultiPoly MultiPoly::homogeneous_part(int d) const
{
  MultiPoly out(n_);
  for (const auto& [e, c] : terms_)
    if (weight(e) == d)
      out.terms_.emplace(e, c);
  return out;
}

MultiPoly MultiPoly::truncated(int d) const
{
  MultiPoly out(n_);
  for (const auto& [e, c] : terms_)
    if (weight(e) <= d)
      out.terms_.emplace(e, c);
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
  if (o.n_ != n_)
    throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : o.terms_)
    add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
  if (o.n_ != n_)
    throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : o.terms_)
    add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s)
{
  if (s == 0)
    terms_.clear();
  for (auto& [e, c] : terms_)
    c *= s;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
  if (a.n_ != b.n_)
    throw std::invalid_argument("variable count mismatch");
  MultiPoly out(a.n_);
  MultiPoly::Exponents e(static_cast<std::size_t>(a.n_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k)
        e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  return out;
}

MultiPoly MultiPoly::partial(int i) const
{
  MultiPoly out(n_);
  for (const auto& [e, c] : terms_) {
    const int k = e[static_cast<std::size_t>(i)];
    if (k == 0)
      continue;
    Exponents lowered = e;
    lowered[static_cast<std::size_t>(i)] = k - 1;
    out.add_term(lowered, c * k);
  }
  return out;
}

MultiPoly MultiPoly::euler(int i) const
{
  MultiPoly out(n_);
  for (const auto& [e, c] : terms_)
    out.add_term(e, c * e[static_cast<std::size_t>(i)]);
  return out;
}

MultiPoly MultiPoly::substitute(const std::vector<int>& target, int n) const
{
  if (static_cast<int>(target.size()) != n_)
    throw std::invalid_argument("substitution needs one target per variable");
  MultiPoly out(n);
  Exponents f(static_cast<std::size_t>(n));
  for (const auto& [e, c] : terms_) {
    std::fill(f.begin(), f.end(), 0);
    for (std::size_t k = 0; k < e.size(); ++k)
      f[static_cast<std::size_t>(target[k])] += e[k];
    out.add_term(f, c);
  }
  return out;
}

MultiPoly MultiPoly::divide_by_difference(int i, int j) const
{
  const auto si = static_cast<std::size_t>(i), sj = static_cast<std::size_t>(j);
  // Synthetic division in x_i: strip the term of highest x_i-degree, c x_i^a m,
  // into the quotient as c x_i^{a-1} m and carry c x_i^{a-1} x_j m.
  MultiPoly rest(*this), quotient(n_);
  while (!rest.is_zero()) {
    auto lead = std::max_element(rest.terms_.begin(), rest.terms_.end(),
                                 [&](const auto& a, const auto& b) {
                                   return a.first[si] < b.first[si];
                                 });
    if (lead->first[si] == 0)
      throw std::domain_error("polynomial is not divisible by (x_i - x_j)");
    Exponents e = lead->first;
    const Rational c = lead->second;
    rest.terms_.erase(lead);
    --e[si];
    quotient.add_term(e, c);
    ++e[sj];
    rest.add_term(e, c);
  }
  return quotient;
}

PowerSeries MultiPoly::diagonal(int bound) const
{
  PowerSeries out(bound);
  for (const auto& [e, c] : terms_) {
    const int d = weight(e);
    if (d <= bound)
      out[d] += c;
  }
  return out;
}

bool MultiPoly::is_symmetric() const
{
  for (const auto& [e, c] : terms_) {
    Exponents p = e;
    std::sort(p.begin(), p.end());
    do {
      if (coefficient(p) != c)
        return false;
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return true;
}

std::string to_string(const MultiPoly& p)
{
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    if (!out.empty())
      out += " + ";
    out += c.get_str();
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0)
        continue;
      out += "*x" + std::to_string(k + 1);
      if (e[k] > 1)
        out += "^" + std::to_string(e[k]);
    }
  }
  return out.empty() ? "0" : out;
}

} // namespace hurwitz
