#pragma once

#include "hurwitz/exp_laurent.hpp"
#include "hurwitz/hurwitz.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hurwitz {

/// sum_{m <= M} c_m(hbar) x^m with ExpLaurent coefficients.
class XSeries {
public:
  explicit XSeries(int bound = 0);

  int bound() const { return static_cast<int>(c_.size()) - 1; }
  const ExpLaurent& operator[](int m) const { return c_[static_cast<std::size_t>(m)]; }
  ExpLaurent& operator[](int m) { return c_[static_cast<std::size_t>(m)]; }
  bool is_zero() const;

  /// c hbar^j e^{a hbar} x^m (zero when m exceeds the bound).
  static XSeries basis(int bound, int j, const Rational& a, int m);

  XSeries& operator+=(const XSeries& o);
  XSeries& operator-=(const XSeries& o);
  XSeries& operator*=(const Rational& s);
  friend XSeries operator+(XSeries a, const XSeries& b) { return a += b; }
  friend XSeries operator-(XSeries a, const XSeries& b) { return a -= b; }
  friend XSeries operator*(XSeries a, const Rational& s) { return a *= s; }
  friend bool operator==(const XSeries&, const XSeries&) = default;

private:
  std::vector<ExpLaurent> c_;
};

/// Composition tree of linear operators on XSeries. Generators act on
/// hbar^j e^{a hbar} x^m as:
///   MulX       -> x^{m+1} (dropped above the series bound)
///   MulHbarPow -> hbar^{j+k}
///   EulerX     -> m
///   DxXPow     -> (m+1)^k, k any integer
///   Shift      -> e^{m hbar}
///   DHbar      -> d/dhbar of the coefficient
class OperatorExpr {
public:
  enum class Kind { Identity, MulX, MulHbarPow, EulerX, DxXPow, Shift, DHbar, Scale, Sum, Compose };

  static OperatorExpr identity();
  static OperatorExpr mul_x();
  static OperatorExpr mul_hbar_pow(int k);
  static OperatorExpr euler_x();
  static OperatorExpr dxx_pow(int k);
  static OperatorExpr shift();
  static OperatorExpr d_hbar();
  static OperatorExpr scale(const Rational& c, const OperatorExpr& op);
  static OperatorExpr sum(std::vector<OperatorExpr> terms);
  /// Factors listed left to right; the rightmost acts first.
  static OperatorExpr compose(std::vector<OperatorExpr> factors);

  Kind kind() const;
  XSeries apply(const XSeries& s) const;
  std::string to_string() const;

  friend OperatorExpr operator+(const OperatorExpr& a, const OperatorExpr& b);
  friend OperatorExpr operator-(const OperatorExpr& a, const OperatorExpr& b);
  friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b);
  friend OperatorExpr operator*(const Rational& c, const OperatorExpr& a);

private:
  struct Node;
  explicit OperatorExpr(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// 1 - hbar^{2h-1} x e^{hbar x d/dx} (d/dx x)^{2h-1}
OperatorExpr build_P_factor(const BaseCurve& base);
/// hbar x d/dx composed with build_P_factor.
OperatorExpr build_P(const BaseCurve& base);
/// d/dhbar - 1/2 (x d/dx)^2 + (1/2 - (2h-1)/hbar) x d/dx
OperatorExpr build_Q(const BaseCurve& base);

/// sum_{m<=M} (m!)^{2h-1} hbar^{m(2h-1)} e^{m(m-1) hbar/2} x^m
XSeries closed_form_Z(const BaseCurve& base, int x_bound);

struct OperatorCheck {
  std::string name;
  int x_bound = 0;
  /// Degrees 0..checked_through must have zero residual.
  int checked_through = 0;
  /// Residual of every degree 0..x_bound, including any excluded layer.
  std::vector<ExpLaurent> residuals;
  /// Top layer left out of the verdict because a degree-raising factor
  /// reads past the truncation.
  std::optional<int> excluded_degree;
  std::optional<int> first_failure;
  bool holds = false;
};

/// P Z = 0 on degrees <= M-1.
OperatorCheck verify_PZ(const BaseCurve& base, int x_bound);
/// Q Z = 0 on every degree <= M.
OperatorCheck verify_QZ(const BaseCurve& base, int x_bound);
/// (build_P_factor) Z = 1 on degrees <= M-1.
OperatorCheck verify_P1_identity(const BaseCurve& base, int x_bound);

struct BasisElement {
  int hbar_power = 0;
  Rational exp_rate = 0;
  int x_degree = 0;
};

struct CommutatorCheck {
  BasisElement element;
  XSeries residual;
  bool holds = false;
};

struct CommutatorReport {
  std::vector<CommutatorCheck> checks;
  std::optional<std::size_t> first_failure;
  bool holds = false;
};

/// Applies PQ - QP + hbar^{-1} P to each basis element. Throws
/// std::invalid_argument for an empty sample.
CommutatorReport verify_commutator(const BaseCurve& base, const std::vector<BasisElement>& sample);

std::vector<BasisElement> basis_grid(const std::vector<int>& hbar_powers,
                                     const std::vector<Rational>& exp_rates,
                                     const std::vector<int>& x_degrees);

/// Null space of f -> f' - (m(m-1)/2 + m(2h-1)/hbar) f on the span of
/// hbar^j e^{a hbar}, |j| <= window + m|2h-1|, a in `exp_rates` (defaults to
/// {0, m(m-1)/2, m(m-1)/2 + 1}). Returned in reduced form.
std::vector<ExpLaurent> solve_mode_equation(const BaseCurve& base, int m, int window = 6,
                                            std::vector<Rational> exp_rates = {});

} // namespace hurwitz
