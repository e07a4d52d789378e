#pragma once

#include "hurwitz/hurwitz.hpp"
#include "hurwitz/multipoly.hpp"
#include "hurwitz/power_series.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hurwitz {

/// F_{g,n}(x_1..x_n) = sum over mu in Z_+^n of H_{g,n}(mu) x^mu.
struct FreeEnergy {
  BaseCurve base;
  int genus = 0;
  int n = 0;
  /// Largest total degree kept. For h >= 1 this is the exact degree bound
  /// (2g-2+n)/(2h-1) and nothing is lost; for h = 0 the series is cut here.
  int degree_bound = 0;
  bool truncated = false;
  MultiPoly poly;
};

/// Lazily built free energies over one Hurwitz table.
class FreeEnergyFamily {
public:
  explicit FreeEnergyFamily(HurwitzTable table);

  /// Table large enough for every F_{g,n} with 2g-2+n <= max_complexity.
  /// The degree bound only matters for h = 0, where free energies are
  /// infinite series.
  static FreeEnergyFamily for_complexity(const BaseCurve& base, int max_complexity,
                                         int degree_bound = 6);

  const HurwitzTable& table() const { return table_; }
  const BaseCurve& base() const { return table_.base(); }

  /// Zero polynomial for g < 0 or n < 1. Throws InsufficientTable when the
  /// table cannot supply every coefficient.
  const FreeEnergy& get(int g, int n);

  /// Degree cut used for F_{g,n}.
  int degree_bound(int g, int n) const;

private:
  HurwitzTable table_;
  std::map<std::pair<int, int>, FreeEnergy> cache_;
};

FreeEnergy build_free_energy(const BaseCurve& base, int g, int n, int degree_bound = 6);

struct PdeLayer {
  int degree = 0;
  MultiPoly lhs;
  MultiPoly rhs;
  /// Degree where the Euler operator on the left vanishes identically.
  bool kernel = false;
  bool holds = false;
};

struct PdeReport {
  BaseCurve base;
  int genus = 0;
  int n = 0;
  int max_degree = 0;
  bool truncated = false;
  std::optional<int> kernel_degree;
  MultiPoly lhs;
  MultiPoly rhs;
  std::vector<PdeLayer> layers;
  std::optional<int> first_failure;
  bool holds = false;
};

/// Checks the Laplace-transformed cut-and-join equation for F_{g,n} in every
/// homogeneous degree. The cut term is formed as an exact divided difference.
/// Requires 2g-2+n > 0 (std::invalid_argument otherwise).
PdeReport verify_pde(FreeEnergyFamily& family, int g, int n);
PdeReport verify_pde(const BaseCurve& base, int g, int n, int degree_bound = 6);

/// S_m(x) = sum_{2g-2+n = m-1} F_{g,n}(x,...,x)/n!. Needs h >= 1 and m >= 2h.
PowerSeries diagonal_S(FreeEnergyFamily& family, int m);
PowerSeries diagonal_S(const BaseCurve& base, int m);

struct SRecursionCheck {
  int m = 0;
  PowerSeries lhs;
  PowerSeries rhs;
  bool holds = false;
};

/// (m - (2h-1) x d/dx) S_{m+1} against
/// 1/2 x^2 S_m'' + 1/2 sum_{m1+m2=m+1} (x S_m1')(x S_m2').
SRecursionCheck verify_S_recursion(FreeEnergyFamily& family, int m);
SRecursionCheck verify_S_recursion(const BaseCurve& base, int m);

struct EllipticF1Check {
  PowerSeries series;         ///< sum_n H_{1,n}(1^n)/n! q^n from the table
  PowerSeries minus_log_phi;  ///< -log prod_{m<=N}(1 - q^m)
  bool matches = false;
};

/// Genus-one generating series over an elliptic base, checked against the
/// Euler function.
EllipticF1Check elliptic_F1_series(int order);

/// F_g(q) = sum_{n<=N} H_{g,n}(1^n)/n! q^n over an elliptic base.
PowerSeries elliptic_Fg_series(int g, int order);

/// E_2, E_4, E_6 normalized to constant term 1:
/// E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n.
PowerSeries eisenstein(int weight, int order);

struct QuasimodularFit {
  int weight = 0;
  int fit_from = 1;
  int fit_to = 0;
  /// Exponents (a, b, c) of E_2^a E_4^b E_6^c.
  std::vector<std::array<int, 3>> basis;
  std::vector<Rational> coefficients;
  /// Degrees outside the fit window that were compared.
  std::vector<int> checked;
  std::optional<int> first_mismatch;
  bool ok = false;
  /// Empty on success; otherwise "inconsistent", "underdetermined" or
  /// "prediction-mismatch".
  std::string diagnostic;
};

/// Solves for a combination of weight-w monomials in E_2, E_4, E_6 matching
/// the q^1..q^fit_rows coefficients of f exactly and checks every other
/// coefficient up to f's bound. Never throws on a failed fit.
QuasimodularFit quasimodular_fit(const PowerSeries& f, int weight, int fit_rows = 4);

std::string basis_label(const std::array<int, 3>& exponents);

} // namespace hurwitz
