#include "hurwitz/free_energy.hpp"

#include <algorithm>

namespace hurwitz {

namespace {

constexpr BaseCurve kElliptic{1};

PowerSeries trivial_profile_series(int order, int r)
{
  if (order < 1)
    throw std::invalid_argument("series order must be positive");
  const HeatSeries connected = connected_trivial_profile(kElliptic, order, r);
  PowerSeries out(order);
  for (int n = 1; n <= order; ++n)
    if (const TPoly* c = connected.find(Partition::ones(n)))
      out[n] = c->at(r);
  return out;
}

Integer divisor_power_sum(int n, int k)
{
  Integer out = 0;
  for (int m = 1; m <= n; ++m)
    if (n % m == 0) {
      Integer p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
      out += p;
    }
  return out;
}

PowerSeries power(const PowerSeries& f, int k)
{
  PowerSeries out = PowerSeries::constant(f.bound(), 1);
  for (int i = 0; i < k; ++i)
    out = out * f;
  return out;
}

} // namespace

EllipticF1Check elliptic_F1_series(int order)
{
  EllipticF1Check out;
  out.series = trivial_profile_series(order, 0);
  PowerSeries phi = PowerSeries::constant(order, 1);
  for (int m = 1; m <= order; ++m)
    phi = phi * (PowerSeries::constant(order, 1) - PowerSeries::monomial(order, m));
  out.minus_log_phi = -log(phi);
  out.matches = out.series == out.minus_log_phi;
  return out;
}

PowerSeries elliptic_Fg_series(int g, int order)
{
  if (g < 1)
    throw std::invalid_argument("elliptic_Fg_series needs g >= 1");
  // mu = 1^n over an elliptic base has r = 2g - 2 for every n.
  return trivial_profile_series(order, 2 * g - 2);
}

PowerSeries eisenstein(int weight, int order)
{
  long scale = 0;
  switch (weight) {
  case 2: scale = -24; break;
  case 4: scale = 240; break;
  case 6: scale = -504; break;
  default: throw std::invalid_argument("eisenstein: weight must be 2, 4 or 6");
  }
  PowerSeries out = PowerSeries::constant(order, 1);
  for (int n = 1; n <= order; ++n)
    out[n] = Rational(divisor_power_sum(n, weight - 1) * scale);
  return out;
}

std::string basis_label(const std::array<int, 3>& exponents)
{
  std::string out;
  const char* names[] = {"E2", "E4", "E6"};
  for (int k = 0; k < 3; ++k) {
    if (exponents[static_cast<std::size_t>(k)] == 0)
      continue;
    if (!out.empty())
      out += "*";
    out += names[k];
    if (exponents[static_cast<std::size_t>(k)] > 1)
      out += "^" + std::to_string(exponents[static_cast<std::size_t>(k)]);
  }
  return out.empty() ? "1" : out;
}

QuasimodularFit quasimodular_fit(const PowerSeries& f, int weight, int fit_rows)
{
  if (weight < 0 || weight % 2 != 0)
    throw std::invalid_argument("quasimodular weight must be even and non-negative");
  if (fit_rows < 1 || fit_rows > f.bound())
    throw std::invalid_argument("fit rows must lie in 1..series order");

  QuasimodularFit fit;
  fit.weight = weight;
  fit.fit_to = fit_rows;
  const int order = f.bound();
  for (int a = weight / 2; a >= 0; --a)
    for (int b = (weight - 2 * a) / 4; b >= 0; --b) {
      const int left = weight - 2 * a - 4 * b;
      if (left % 6 == 0)
        fit.basis.push_back({a, b, left / 6});
    }

  const PowerSeries e2 = eisenstein(2, order), e4 = eisenstein(4, order),
                    e6 = eisenstein(6, order);
  std::vector<PowerSeries> columns;
  for (const auto& [a, b, c] : fit.basis)
    columns.push_back(power(e2, a) * power(e4, b) * power(e6, c));

  // Gauss-Jordan on the fit_rows x (basis + 1) augmented system.
  const std::size_t cols = columns.size();
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(fit_rows),
                                       std::vector<Rational>(cols + 1));
  for (int r = 0; r < fit_rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c)
      m[static_cast<std::size_t>(r)][c] = columns[c][r + 1];
    m[static_cast<std::size_t>(r)][cols] = f[r + 1];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    auto p = std::find_if(m.begin() + static_cast<long>(row), m.end(),
                          [c](const auto& r) { return r[c] != 0; });
    if (p == m.end())
      continue;
    std::swap(*p, m[row]);
    const Rational lead = m[row][c];
    for (auto& v : m[row])
      v /= lead;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0)
        continue;
      const Rational factor = m[r][c];
      for (std::size_t k = 0; k <= cols; ++k)
        m[r][k] -= factor * m[row][k];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < m.size(); ++r)
    if (m[r][cols] != 0) {
      fit.diagnostic = "inconsistent";
      return fit;
    }
  if (pivot_col.size() < cols) {
    fit.diagnostic = "underdetermined";
    return fit;
  }
  fit.coefficients.assign(cols, Rational(0));
  for (std::size_t r = 0; r < pivot_col.size(); ++r)
    fit.coefficients[pivot_col[r]] = m[r][cols];

  PowerSeries prediction(order);
  for (std::size_t c = 0; c < cols; ++c)
    prediction += columns[c] * fit.coefficients[c];
  for (int k = 0; k <= order; ++k) {
    if (k >= 1 && k <= fit_rows)
      continue;
    fit.checked.push_back(k);
    if (prediction[k] != f[k] && !fit.first_mismatch)
      fit.first_mismatch = k;
  }
  fit.ok = !fit.first_mismatch;
  if (!fit.ok)
    fit.diagnostic = "prediction-mismatch";
  return fit;
}

} // namespace hurwitz
