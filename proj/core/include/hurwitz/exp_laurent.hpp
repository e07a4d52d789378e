#pragma once

#include "hurwitz/rational.hpp"

#include <map>
#include <string>

namespace hurwitz {

/// Laurent polynomial in hbar: exponent -> coefficient, zeros not stored.
class LaurentPoly {
public:
  using Terms = std::map<int, Rational>;

  LaurentPoly() = default;
  static LaurentPoly monomial(int exponent, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int exponent) const;
  void add_term(int exponent, const Rational& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& s);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly derivative() const;
  LaurentPoly shifted(int k) const;  ///< times hbar^k
  /// Drops exponents above `max_exponent`.
  LaurentPoly truncated(int max_exponent) const;

private:
  Terms terms_;
};

/// Finite sum_a q_a(hbar) e^{a hbar} with rational a and Laurent q_a. The
/// representation is canonical, so == is equality of functions.
class ExpLaurent {
public:
  using Terms = std::map<Rational, LaurentPoly>;

  ExpLaurent() = default;
  ExpLaurent(const Rational& c);  // NOLINT: constants embed implicitly
  /// c hbar^j e^{a hbar}
  static ExpLaurent basis(int j, const Rational& a, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Rational& a, const LaurentPoly& q);

  ExpLaurent& operator+=(const ExpLaurent& o);
  ExpLaurent& operator-=(const ExpLaurent& o);
  ExpLaurent& operator*=(const Rational& s);
  friend ExpLaurent operator+(ExpLaurent a, const ExpLaurent& b) { return a += b; }
  friend ExpLaurent operator-(ExpLaurent a, const ExpLaurent& b) { return a -= b; }
  friend ExpLaurent operator*(ExpLaurent a, const Rational& s) { return a *= s; }
  friend ExpLaurent operator*(const ExpLaurent& a, const ExpLaurent& b);
  friend bool operator==(const ExpLaurent&, const ExpLaurent&) = default;

  /// d/dhbar: q e^{a hbar} -> (q' + a q) e^{a hbar}.
  ExpLaurent derivative() const;
  /// Times hbar^k.
  ExpLaurent times_hbar(int k) const;
  /// Times e^{s hbar}.
  ExpLaurent times_exp(const Rational& s) const;

  /// Taylor-expands every e^{a hbar} and keeps exponents <= max_exponent.
  LaurentPoly expand(int max_exponent) const;

private:
  Terms terms_;
};

std::string to_string(const LaurentPoly& q);
/// "(q_a)*e^(a*h) + ..." in increasing a; "0" for zero.
std::string to_string(const ExpLaurent& f);

} // namespace hurwitz
