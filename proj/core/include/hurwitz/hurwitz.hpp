#pragma once

#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/symfun.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace hurwitz {

/// Compact base curve of genus h.
struct BaseCurve {
  int genus = 0;

  /// chi(B) = 2 - 2h.
  int euler_characteristic() const { return 2 - 2 * genus; }
  /// 1 - chi(B) = 2h - 1; the exponent that recurs throughout.
  int twist() const { return 2 * genus - 1; }

  friend bool operator==(const BaseCurve&, const BaseCurve&) = default;
};

/// Generating series in t whose coefficients are symmetric functions in p.
using HeatSeries = GradedSeries<TPoly>;

struct NegativeRamification : std::domain_error {
  using std::domain_error::domain_error;
};

struct InsufficientTable : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// r(g, mu) = 2g - 2 + l(mu) - |mu|(2h - 1). May be negative.
int ramification_count(const BaseCurve& base, int g, const Partition& mu);

/// Inverse of ramification_count: the genus g with r(g, mu) = r, or nullopt
/// when no non-negative integer genus fits.
std::optional<int> genus_for(const BaseCurve& base, int r, const Partition& mu);

/// sum_{|mu| <= D} (|mu|!/dim mu)^{1-chi} s_mu(p) exp(p_2[mu] t / 2), truncated at
/// p-degree D and t-degree R. The coefficient of p_mu t^r, times r!, counts
/// possibly disconnected covers with r fixed simple branch points, weighted by
/// 1/d!.
HeatSeries disconnected_generating_function(const BaseCurve& base, int degree_bound,
                                            int ramification_bound);

/// Formal logarithm. Throws std::invalid_argument unless the constant term is 1.
HeatSeries connected_from_disconnected(const HeatSeries& disconnected);

/// Only the p_1^n monomials of the connected series; this is the whole input
/// needed for unramified-profile (mu = 1^n) numbers and is much cheaper than
/// the full table at large n.
HeatSeries connected_trivial_profile(const BaseCurve& base, int degree_bound,
                                     int ramification_bound);

/// d/dt F - Delta F with the top t-layer dropped (it is not determined by the
/// truncation). Zero exactly when F solves the cut-and-join heat equation.
HeatSeries heat_residual(const HeatSeries& series);

struct HurwitzEntry {
  int genus;
  Partition mu;
  int r;
  Rational value;
};

/// Connected and disconnected base-B Hurwitz numbers up to degree D and
/// ramification R, built by eigenfunction expansion of the heat equation.
class HurwitzTable {
public:
  static HurwitzTable build(const BaseCurve& base, int degree_bound, int ramification_bound);

  const BaseCurve& base() const { return base_; }
  int degree_bound() const { return degree_bound_; }
  int ramification_bound() const { return ramification_bound_; }
  const HeatSeries& disconnected() const { return disconnected_; }
  const HeatSeries& connected() const { return connected_; }

  /// [p_mu t^r] of the disconnected series.
  Rational disconnected_coefficient(int r, const Partition& mu) const;
  /// [p_mu t^r] of the connected series.
  Rational connected_coefficient(int r, const Partition& mu) const;

  bool covers(int r, const Partition& mu) const
  {
    return r >= 0 && r <= ramification_bound_ && mu.size() <= degree_bound_;
  }

  /// H_{g,n}^B(mu) with labeled preimages: prod_i m_i! times the connected
  /// coefficient. Throws NegativeRamification when r(g, mu) < 0 and
  /// InsufficientTable when (|mu|, r) lies outside the bounds.
  Rational number(int g, const Partition& mu) const;
  Rational number(int g, std::span<const int> mu) const;

  /// Like number(), but 0 for g < 0, empty mu, or r(g, mu) < 0.
  Rational number_or_zero(int g, std::span<const int> mu) const;

  /// Non-zero connected entries ordered by (|mu|, mu, g).
  std::vector<HurwitzEntry> entries() const;

private:
  BaseCurve base_;
  int degree_bound_ = 0;
  int ramification_bound_ = 0;
  HeatSeries disconnected_{0};
  HeatSeries connected_{0};
};

/// Convenience: builds a table just large enough for (g, mu).
Rational hurwitz_number(const BaseCurve& base, int g, const Partition& mu);

enum class CajStatus { Holds, Fails, Skipped };

struct CajCheck {
  CajStatus status;
  int r;
  Rational lhs;
  Rational rhs;
};

/// Compares both sides of the cut-and-join recursion for H_{g,n}(mu) using
/// table values. Skipped when r(g, mu) <= 0, where the recursion degenerates
/// to 0 = 0.
CajCheck verify_cut_and_join(const HurwitzTable& table, int g, std::span<const int> mu);

} // namespace hurwitz
