#pragma once

#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hurwitz {

/// Polynomial in a formal variable t, truncated above t^bound.
class TPoly {
public:
  TPoly() = default;
  explicit TPoly(int bound) : c_(static_cast<std::size_t>(bound + 1)) {}
  static TPoly constant(int bound, const Rational& value);
  static TPoly monomial(int bound, int degree, const Rational& value);

  int bound() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int r) const { return c_[static_cast<std::size_t>(r)]; }
  Rational& operator[](int r) { return c_[static_cast<std::size_t>(r)]; }
  Rational at(int r) const;

  bool is_zero() const;
  TPoly derivative() const;

  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  TPoly& operator*=(const Rational& s);
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(TPoly a, const Rational& s) { return a *= s; }
  friend bool operator==(const TPoly&, const TPoly&) = default;

private:
  std::vector<Rational> c_;
};

inline bool coefficient_is_zero(const Rational& q) { return q == 0; }
inline bool coefficient_is_zero(const TPoly& p) { return p.is_zero(); }

/// Sorted union of the parts of two partitions (product p_a * p_b).
Partition merge_parts(const Partition& a, const Partition& b);

/// Graded polynomial in the power sums p_1, p_2, ... Monomials are keyed by
/// partitions and truncated at total weight |mu| <= degree bound. Zero
/// coefficients are never stored.
template <class Coeff>
class GradedSeries {
public:
  using Terms = std::map<Partition, Coeff>;

  explicit GradedSeries(int degree_bound) : bound_(degree_bound)
  {
    if (degree_bound < 0)
      throw std::invalid_argument("degree bound must be non-negative");
  }

  int degree_bound() const { return bound_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * p_mu, dropping it when |mu| exceeds the bound.
  void add_term(const Partition& mu, const Coeff& c)
  {
    if (mu.size() > bound_ || coefficient_is_zero(c))
      return;
    auto [it, inserted] = terms_.try_emplace(mu, c);
    if (!inserted) {
      it->second += c;
      if (coefficient_is_zero(it->second))
        terms_.erase(it);
    }
  }

  const Coeff* find(const Partition& mu) const
  {
    auto it = terms_.find(mu);
    return it == terms_.end() ? nullptr : &it->second;
  }

  GradedSeries homogeneous_part(int d) const
  {
    GradedSeries out(bound_);
    for (const auto& [mu, c] : terms_)
      if (mu.size() == d)
        out.terms_.emplace(mu, c);
    return out;
  }

  GradedSeries with_bound(int bound) const
  {
    GradedSeries out(bound);
    for (const auto& [mu, c] : terms_)
      out.add_term(mu, c);
    return out;
  }

  GradedSeries& operator+=(const GradedSeries& o)
  {
    for (const auto& [mu, c] : o.terms_)
      add_term(mu, c);
    return *this;
  }
  GradedSeries& operator-=(const GradedSeries& o)
  {
    for (const auto& [mu, c] : o.terms_)
      add_term(mu, c * Rational(-1));
    return *this;
  }
  GradedSeries& operator*=(const Rational& s)
  {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [mu, c] : terms_)
      c *= s;
    return *this;
  }

  friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
  friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }
  friend GradedSeries operator*(GradedSeries a, const Rational& s) { return a *= s; }
  friend GradedSeries operator*(const Rational& s, GradedSeries a) { return a *= s; }

  /// Product truncated at the smaller of the two degree bounds.
  friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b)
  {
    GradedSeries out(std::min(a.bound_, b.bound_));
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        if (ma.size() + mb.size() > out.bound_)
          continue;
        out.add_term(merge_parts(ma, mb), ca * cb);
      }
    return out;
  }

  friend bool operator==(const GradedSeries& a, const GradedSeries& b)
  {
    return a.bound_ == b.bound_ && a.terms_ == b.terms_;
  }

  /// Partial derivative with respect to p_j.
  GradedSeries derivative(int j) const
  {
    GradedSeries out(bound_);
    for (const auto& [mu, c] : terms_) {
      const int m = mu.multiplicity(j);
      if (m > 0)
        out.add_term(mu.without(j), c * Rational(m));
    }
    return out;
  }

  /// Applies f to every coefficient, keeping monomials.
  template <class F>
  GradedSeries map_coefficients(F&& f) const
  {
    GradedSeries out(bound_);
    for (const auto& [mu, c] : terms_)
      out.add_term(mu, f(c));
    return out;
  }

private:
  int bound_;
  Terms terms_;
};

using SymFun = GradedSeries<Rational>;

/// exp(f) for f with no p_emptyset term, truncated at f's degree bound.
/// Uses d*G_d = sum_{k=1}^d k f_k G_{d-k} on homogeneous pieces.
template <class Coeff>
GradedSeries<Coeff> exp_series(const GradedSeries<Coeff>& f, const Coeff& one)
{
  if (f.find(Partition{}))
    throw std::invalid_argument("exp_series: non-zero constant term");
  const int bound = f.degree_bound();
  std::vector<GradedSeries<Coeff>> fd, gd;
  for (int d = 0; d <= bound; ++d)
    fd.push_back(f.homogeneous_part(d));
  GradedSeries<Coeff> g0(bound);
  g0.add_term(Partition{}, one);
  gd.push_back(g0);
  for (int d = 1; d <= bound; ++d) {
    GradedSeries<Coeff> acc(bound);
    for (int k = 1; k <= d; ++k)
      if (!fd[k].is_zero() && !gd[d - k].is_zero())
        acc += (fd[k] * gd[d - k]) * Rational(k);
    acc *= frac(1, d);
    gd.push_back(std::move(acc));
  }
  GradedSeries<Coeff> out(bound);
  for (const auto& piece : gd)
    out += piece;
  return out;
}

/// log(F) for F whose p_emptyset coefficient is exactly `one`.
/// Uses L_d = F_d - (1/d) sum_{k=1}^{d-1} k L_k F_{d-k}.
template <class Coeff>
GradedSeries<Coeff> log_series(const GradedSeries<Coeff>& F, const Coeff& one)
{
  const Coeff* c0 = F.find(Partition{});
  if (!c0 || !(*c0 == one))
    throw std::invalid_argument("log_series: constant term must be 1");
  const int bound = F.degree_bound();
  std::vector<GradedSeries<Coeff>> fd, ld;
  for (int d = 0; d <= bound; ++d)
    fd.push_back(F.homogeneous_part(d));
  ld.emplace_back(bound);
  for (int d = 1; d <= bound; ++d) {
    GradedSeries<Coeff> acc(bound);
    for (int k = 1; k < d; ++k)
      if (!ld[k].is_zero() && !fd[d - k].is_zero())
        acc += (ld[k] * fd[d - k]) * Rational(k);
    acc *= frac(-1, d);
    acc += fd[d];
    ld.push_back(std::move(acc));
  }
  GradedSeries<Coeff> out(bound);
  for (const auto& piece : ld)
    out += piece;
  return out;
}

/// Action of the cut-and-join operator
///   1/2 sum_{i,j>=1} ((i+j) p_i p_j d/dp_{i+j} + i j p_{i+j} d^2/dp_i dp_j)
/// on a single monomial p_mu, as a list of (monomial, rational weight).
std::vector<std::pair<Partition, Rational>> cut_and_join_monomial(const Partition& mu);

template <class Coeff>
GradedSeries<Coeff> cut_and_join(const GradedSeries<Coeff>& f)
{
  GradedSeries<Coeff> out(f.degree_bound());
  for (const auto& [mu, c] : f.terms())
    for (const auto& [nu, w] : cut_and_join_monomial(mu))
      out.add_term(nu, c * w);
  return out;
}

/// s_mu = sum_{lambda |- |mu|} chi_mu(lambda)/z_lambda p_lambda.
/// Throws std::invalid_argument when |mu| > D.
SymFun schur(const Partition& mu, int degree_bound);

/// Shifted power sum p_2[mu] = sum_i mu_i (mu_i - 2i + 1); the eigenvalue of
/// twice the cut-and-join operator on s_mu.
long shifted_p2(const Partition& mu);

std::string to_string(const SymFun& f);

} // namespace hurwitz
