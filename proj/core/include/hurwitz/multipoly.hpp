#pragma once

#include "hurwitz/power_series.hpp"
#include "hurwitz/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace hurwitz {

/// Polynomial in a fixed number of variables x_0 .. x_{n-1} with rational
/// coefficients, keyed by exponent vectors. Zero coefficients are not stored.
class MultiPoly {
public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, Rational>;

  explicit MultiPoly(int variables = 0) : n_(variables) {}

  int variables() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Exponents& e) const;

  void add_term(const Exponents& e, const Rational& c);

  /// Largest total degree, -1 for the zero polynomial.
  int total_degree() const;
  /// Part of total degree exactly d.
  MultiPoly homogeneous_part(int d) const;
  /// Drops all monomials of total degree above d.
  MultiPoly truncated(int d) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& s);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  /// d/dx_i.
  MultiPoly partial(int i) const;
  /// x_i d/dx_i.
  MultiPoly euler(int i) const;
  /// Sends variable k to variable target[k] of an n-variable ring; repeated
  /// targets multiply (so target = {0, 0} restricts to a diagonal).
  MultiPoly substitute(const std::vector<int>& target, int n) const;
  /// Exact quotient by (x_i - x_j). Throws std::domain_error when the
  /// division leaves a remainder.
  MultiPoly divide_by_difference(int i, int j) const;
  /// P(x, x, ..., x) as a univariate polynomial.
  PowerSeries diagonal(int bound) const;

  /// Invariant under every permutation of the variables.
  bool is_symmetric() const;

private:
  int n_;
  Terms terms_;
};

std::string to_string(const MultiPoly& p);

} // namespace hurwitz
