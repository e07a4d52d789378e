#pragma once

#include "hurwitz/exp_laurent.hpp"
#include "hurwitz/hurwitz.hpp"
#include "hurwitz/operators.hpp"

#include <complex>
#include <optional>
#include <utility>
#include <vector>

namespace hurwitz {

/// Coefficients of x^0..x^M, each a Laurent polynomial in hbar cut above
/// hbar^K.
struct HbarXSeries {
  int x_bound = 0;
  int hbar_bound = 0;
  std::vector<LaurentPoly> coefficients;

  Rational coefficient(int m, int k) const;
  friend bool operator==(const HbarXSeries&, const HbarXSeries&) = default;
};

/// Smallest domain genus included by default: 0 over P^1, 1 otherwise.
int default_genus_floor(const BaseCurve& base);

/// exp of sum over connected covers with genus >= floor of
/// [p_mu t^r]H hbar^{2g-2+n} x^{|mu|}, i.e. the principal specialization of
/// the heat-equation series, truncated at x^M and hbar^K.
HbarXSeries diagonal_partition_function(const BaseCurve& base, int x_bound, int hbar_bound,
                                        std::optional<int> genus_floor = std::nullopt);

/// Taylor-expands every e^{a hbar} of s and keeps hbar^k for k <= K.
HbarXSeries expand_in_hbar(const XSeries& s, int hbar_bound);

struct ZMatch {
  int genus_floor = 0;
  HbarXSeries diagonal;
  HbarXSeries closed_form;
  /// (m, k) positions where the two disagree, in increasing order.
  std::vector<std::pair<int, int>> mismatches;
  bool holds = false;
};

ZMatch z_match(const BaseCurve& base, int x_bound, int hbar_bound,
               std::optional<int> genus_floor = std::nullopt);

struct ConvergenceCheck {
  std::complex<double> hbar;
  std::complex<double> low_sum;
  std::complex<double> high_sum;
  double relative_difference = 0;
  bool holds = false;
};

/// Partial sums of the closed-form partition function at hbar = 2 pi i tau
/// through x^low and x^high, compared relatively. Floating point; terms are
/// evaluated in log space.
ConvergenceCheck convergence_smoke_test(const BaseCurve& base, int low = 20, int high = 25,
                                        std::complex<double> tau = {0.0, 1.0},
                                        std::complex<double> x = {1.0, 0.0},
                                        double tolerance = 1e-10);

} // namespace hurwitz
