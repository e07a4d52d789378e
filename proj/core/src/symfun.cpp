#include "hurwitz/symfun.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace hurwitz {

TPoly TPoly::constant(int bound, const Rational& value)
{
  TPoly p(bound);
  p.c_[0] = value;
  return p;
}

TPoly TPoly::monomial(int bound, int degree, const Rational& value)
{
  TPoly p(bound);
  if (degree <= bound)
    p.c_[static_cast<std::size_t>(degree)] = value;
  return p;
}

Rational TPoly::at(int r) const
{
  if (r < 0 || r > bound())
    return 0;
  return c_[static_cast<std::size_t>(r)];
}

bool TPoly::is_zero() const
{
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

TPoly TPoly::derivative() const
{
  TPoly out(bound());
  for (int r = 1; r <= bound(); ++r)
    out.c_[static_cast<std::size_t>(r - 1)] = c_[static_cast<std::size_t>(r)] * r;
  return out;
}

TPoly& TPoly::operator+=(const TPoly& o)
{
  if (o.c_.size() > c_.size())
    c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    c_[i] += o.c_[i];
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o)
{
  if (o.c_.size() > c_.size())
    c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    c_[i] -= o.c_[i];
  return *this;
}

TPoly& TPoly::operator*=(const Rational& s)
{
  for (auto& q : c_)
    q *= s;
  return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b)
{
  const int bound = std::min(a.bound(), b.bound());
  TPoly out(bound);
  for (int i = 0; i <= bound; ++i) {
    if (a.c_[static_cast<std::size_t>(i)] == 0)
      continue;
    for (int j = 0; i + j <= bound; ++j)
      out.c_[static_cast<std::size_t>(i + j)] +=
          a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
  }
  return out;
}

Partition merge_parts(const Partition& a, const Partition& b)
{
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(a.length() + b.length()));
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
             std::back_inserter(out), std::greater<>());
  return Partition(std::move(out));
}

std::vector<std::pair<Partition, Rational>> cut_and_join_monomial(const Partition& mu)
{
  std::vector<std::pair<Partition, Rational>> out;
  std::vector<int> distinct(mu.parts().begin(), mu.parts().end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  // Cut: d/dp_k hits one of the m_k copies of p_k, replaced by
  // (k/2) sum_{i=1}^{k-1} p_i p_{k-i}.
  for (int k : distinct) {
    if (k < 2)
      continue;
    const Partition rest = mu.without(k);
    const int m = mu.multiplicity(k);
    for (int i = 1; i < k; ++i)
      out.emplace_back(rest.with(i).with(k - i), frac(k * m, 2));
  }

  // Join: ordered pairs (i, j) of parts, 1/2 * i * j * p_{i+j}.
  for (int i : distinct)
    for (int j : distinct) {
      const int mi = mu.multiplicity(i);
      const long pairs = (i == j) ? static_cast<long>(mi) * (mi - 1)
                                  : static_cast<long>(mi) * mu.multiplicity(j);
      if (pairs == 0)
        continue;
      const Partition rest = mu.without(i).without(j);
      out.emplace_back(rest.with(i + j), frac(static_cast<long>(i) * j * pairs, 2));
    }
  for (auto& [p, w] : out)
    w.canonicalize();
  return out;
}

SymFun schur(const Partition& mu, int degree_bound)
{
  if (mu.size() > degree_bound)
    throw std::invalid_argument("schur: |mu| exceeds degree bound");
  SymFun out(degree_bound);
  for (const auto& lambda : enumerate_partitions(mu.size())) {
    Rational c(Integer(static_cast<long>(character(mu, lambda))), z_of(lambda));
    c.canonicalize();
    out.add_term(lambda, c);
  }
  return out;
}

long shifted_p2(const Partition& mu)
{
  long total = 0;
  for (int i = 1; i <= mu.length(); ++i) {
    const long m = mu.part(static_cast<std::size_t>(i - 1));
    total += m * (m - 2L * i + 1);
  }
  return total;
}

std::string to_string(const SymFun& f)
{
  if (f.is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mu, c] : f.terms()) {
    os << (first ? "" : " + ") << to_string(c);
    for (int p : mu.parts())
      os << "*p" << p;
    first = false;
  }
  return os.str();
}

} // namespace hurwitz
