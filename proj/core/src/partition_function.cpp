#include "hurwitz/partition_function.hpp"

#include <cmath>
#include <numbers>

namespace hurwitz {

Rational HbarXSeries::coefficient(int m, int k) const
{
  if (m < 0 || m > x_bound || k > hbar_bound)
    return 0;
  return coefficients[static_cast<std::size_t>(m)].coefficient(k);
}

int default_genus_floor(const BaseCurve& base)
{
  return base.genus == 0 ? 0 : 1;
}

HbarXSeries diagonal_partition_function(const BaseCurve& base, int x_bound, int hbar_bound,
                                        std::optional<int> genus_floor)
{
  if (x_bound < 0)
    throw std::invalid_argument("x bound must be non-negative");
  const int floor = genus_floor.value_or(default_genus_floor(base));
  const int k = base.twist();
  // Only genus-0 one-point covers over P^1 carry hbar^{-1}; with them present
  // a degree-d factor can be multiplied by up to (M-d) more negative powers,
  // so intermediate cut-offs need that much slack.
  const int slack = (base.genus == 0 && floor == 0) ? 1 : 0;
  const auto cutoff = [&](int d) { return hbar_bound + slack * (x_bound - d); };

  // r = (hbar exponent) - (2h-1)d, largest at d = M over P^1 and d = 1 otherwise.
  const int r_bound = std::max(base.genus == 0 ? hbar_bound + x_bound : hbar_bound - k, 0);
  const HurwitzTable table = HurwitzTable::build(base, x_bound, r_bound);

  std::vector<LaurentPoly> F(static_cast<std::size_t>(x_bound + 1));
  for (const auto& [mu, c] : table.connected().terms()) {
    const int d = mu.size();
    if (d == 0)
      continue;
    for (int r = 0; r <= c.bound(); ++r) {
      if (c[r] == 0)
        continue;
      const auto g = genus_for(base, r, mu);
      if (!g || *g < floor)
        continue;
      const int e = r + k * d;
      if (e <= cutoff(d))
        F[static_cast<std::size_t>(d)].add_term(e, c[r]);
    }
  }

  // Z = exp(F) graded by x-degree: m Z_m = sum_{j=1}^m j F_j Z_{m-j}.
  std::vector<LaurentPoly> Z(static_cast<std::size_t>(x_bound + 1));
  Z[0] = LaurentPoly::monomial(0);
  for (int m = 1; m <= x_bound; ++m) {
    LaurentPoly acc;
    for (int j = 1; j <= m; ++j)
      acc += (F[static_cast<std::size_t>(j)] * Z[static_cast<std::size_t>(m - j)]) * Rational(j);
    Z[static_cast<std::size_t>(m)] = (acc * frac(1, m)).truncated(cutoff(m));
  }

  HbarXSeries out;
  out.x_bound = x_bound;
  out.hbar_bound = hbar_bound;
  for (auto& z : Z)
    out.coefficients.push_back(z.truncated(hbar_bound));
  return out;
}

HbarXSeries expand_in_hbar(const XSeries& s, int hbar_bound)
{
  HbarXSeries out;
  out.x_bound = s.bound();
  out.hbar_bound = hbar_bound;
  for (int m = 0; m <= s.bound(); ++m)
    out.coefficients.push_back(s[m].expand(hbar_bound));
  return out;
}

ZMatch z_match(const BaseCurve& base, int x_bound, int hbar_bound, std::optional<int> genus_floor)
{
  ZMatch out;
  out.genus_floor = genus_floor.value_or(default_genus_floor(base));
  out.diagonal = diagonal_partition_function(base, x_bound, hbar_bound, out.genus_floor);
  out.closed_form = expand_in_hbar(closed_form_Z(base, x_bound), hbar_bound);
  for (int m = 0; m <= x_bound; ++m) {
    const LaurentPoly diff = out.diagonal.coefficients[static_cast<std::size_t>(m)] -
                             out.closed_form.coefficients[static_cast<std::size_t>(m)];
    for (const auto& [e, c] : diff.terms())
      out.mismatches.emplace_back(m, e);
  }
  out.holds = out.mismatches.empty();
  return out;
}

ConvergenceCheck convergence_smoke_test(const BaseCurve& base, int low, int high,
                                        std::complex<double> tau, std::complex<double> x,
                                        double tolerance)
{
  if (low < 0 || high < low)
    throw std::invalid_argument("need 0 <= low <= high");
  ConvergenceCheck out;
  out.hbar = 2.0 * std::numbers::pi * std::complex<double>(0.0, 1.0) * tau;
  const double k = base.twist();
  const std::complex<double> log_hbar = std::log(out.hbar), log_x = std::log(x);
  std::complex<double> sum = 0;
  for (int m = 0; m <= high; ++m) {
    const double md = m;
    const std::complex<double> log_term = k * std::lgamma(md + 1.0) + md * k * log_hbar +
                                          0.5 * md * (md - 1.0) * out.hbar + md * log_x;
    sum += std::exp(log_term);
    if (m == low)
      out.low_sum = sum;
  }
  out.high_sum = sum;
  out.relative_difference = std::abs(out.high_sum - out.low_sum) / std::abs(out.high_sum);
  out.holds = out.relative_difference < tolerance;
  return out;
}

} // namespace hurwitz
