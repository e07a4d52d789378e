#pragma once

#include "hurwitz/rational.hpp"

#include <string>
#include <vector>

namespace hurwitz {

/// Power series in one variable with exact rational coefficients, truncated
/// above x^bound. Binary operations truncate at the smaller bound.
class PowerSeries {
public:
  PowerSeries() = default;
  explicit PowerSeries(int bound);
  PowerSeries(int bound, std::vector<Rational> coefficients);

  static PowerSeries constant(int bound, const Rational& value);
  /// x^k (zero when k > bound).
  static PowerSeries monomial(int bound, int k, const Rational& value = 1);

  int bound() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  Rational& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
  /// Coefficient of x^k, zero past the bound or for negative k.
  Rational at(int k) const;
  const std::vector<Rational>& coefficients() const { return c_; }

  bool is_zero() const;
  /// Largest k with a non-zero coefficient, or -1 for the zero series.
  int degree() const;
  PowerSeries truncated(int bound) const;

  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o);
  PowerSeries& operator*=(const Rational& s);
  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator-(PowerSeries a) { return a *= Rational(-1); }
  friend PowerSeries operator*(PowerSeries a, const Rational& s) { return a *= s; }
  friend PowerSeries operator*(const Rational& s, PowerSeries a) { return a *= s; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend bool operator==(const PowerSeries& a, const PowerSeries& b);

  /// d/dx; the bound drops by one.
  PowerSeries derivative() const;
  /// x d/dx; keeps the bound.
  PowerSeries euler() const;

private:
  std::vector<Rational> c_;
};

/// exp(f) for f(0) = 0. Throws std::invalid_argument otherwise.
PowerSeries exp(const PowerSeries& f);
/// log(f) for f(0) = 1. Throws std::invalid_argument otherwise.
PowerSeries log(const PowerSeries& f);
/// 1/f for f(0) != 0. Throws std::domain_error otherwise.
PowerSeries inverse(const PowerSeries& f);

/// "c0 + c1*x + ..." with zero terms omitted ("0" for the zero series).
std::string to_string(const PowerSeries& f, const std::string& variable = "x");

} // namespace hurwitz
