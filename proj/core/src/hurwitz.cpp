#include "hurwitz/hurwitz.hpp"

#include <algorithm>
#include <numeric>

namespace hurwitz {

int ramification_count(const BaseCurve& base, int g, const Partition& mu)
{
  return 2 * g - 2 + mu.length() - mu.size() * base.twist();
}

std::optional<int> genus_for(const BaseCurve& base, int r, const Partition& mu)
{
  const int twice = r - mu.length() + mu.size() * base.twist() + 2;
  if (twice < 0 || twice % 2 != 0)
    return std::nullopt;
  return twice / 2;
}

namespace {

/// sum_{r <= R} (e t)^r / r!
TPoly exp_poly(int bound, const Rational& e)
{
  TPoly out(bound);
  Rational term = 1;
  for (int r = 0; r <= bound; ++r) {
    out[r] = term;
    term *= e;
    term /= r + 1;
  }
  return out;
}

/// (d!/dim lambda)^{1-chi}
Rational eigen_weight(const BaseCurve& base, const Partition& lambda)
{
  Rational ratio(factorial(static_cast<unsigned>(lambda.size())), dim_of(lambda));
  ratio.canonicalize();
  return pow(ratio, base.twist());
}

Integer multiplicity_factorials(const Partition& mu)
{
  Integer out = 1;
  auto parts = mu.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i])
      ++j;
    out *= factorial(static_cast<unsigned>(j - i));
    i = j;
  }
  return out;
}

} // namespace

HeatSeries disconnected_generating_function(const BaseCurve& base, int degree_bound,
                                            int ramification_bound)
{
  if (degree_bound < 0 || ramification_bound < 0)
    throw std::invalid_argument("bounds must be non-negative");
  HeatSeries out(degree_bound);
  for (int d = 0; d <= degree_bound; ++d) {
    const auto classes = enumerate_partitions(d);
    for (const auto& lambda : classes) {
      const Rational weight = eigen_weight(base, lambda);
      const TPoly evolution = exp_poly(ramification_bound, frac(shifted_p2(lambda), 2)) * weight;
      for (const auto& nu : classes) {
        const auto chi = character(lambda, nu);
        if (chi == 0)
          continue;
        Rational c(Integer(static_cast<long>(chi)), z_of(nu));
        c.canonicalize();
        out.add_term(nu, evolution * c);
      }
    }
  }
  return out;
}

HeatSeries connected_from_disconnected(const HeatSeries& disconnected)
{
  const TPoly* c0 = disconnected.find(Partition{});
  if (!c0)
    throw std::invalid_argument("connected_from_disconnected: constant term must be 1");
  return log_series(disconnected, TPoly::constant(c0->bound(), 1));
}

HeatSeries connected_trivial_profile(const BaseCurve& base, int degree_bound,
                                     int ramification_bound)
{
  // Setting p_j = 0 for j >= 2 is a ring map, so it commutes with log; the
  // p_1^d coefficient of s_lambda is dim(lambda)/d!.
  HeatSeries disc(degree_bound);
  for (int d = 0; d <= degree_bound; ++d) {
    TPoly layer(ramification_bound);
    for (const auto& lambda : enumerate_partitions(d)) {
      Rational share(dim_of(lambda), factorial(static_cast<unsigned>(d)));
      share.canonicalize();
      layer += exp_poly(ramification_bound, frac(shifted_p2(lambda), 2)) *
               Rational(eigen_weight(base, lambda) * share);
    }
    disc.add_term(Partition::ones(d), layer);
  }
  return connected_from_disconnected(disc);
}

HeatSeries heat_residual(const HeatSeries& series)
{
  HeatSeries out(series.degree_bound());
  const auto lower = [](const TPoly& p) {
    TPoly q(std::max(p.bound() - 1, 0));
    for (int r = 0; r <= q.bound(); ++r)
      q[r] = p[r];
    return q;
  };
  for (const auto& [mu, c] : series.terms())
    out.add_term(mu, lower(c.derivative()));
  const HeatSeries flow = cut_and_join(series);
  for (const auto& [mu, c] : flow.terms())
    out.add_term(mu, lower(c) * Rational(-1));
  return out;
}

HurwitzTable HurwitzTable::build(const BaseCurve& base, int degree_bound, int ramification_bound)
{
  if (base.genus < 0)
    throw std::invalid_argument("base genus must be non-negative");
  HurwitzTable t;
  t.base_ = base;
  t.degree_bound_ = degree_bound;
  t.ramification_bound_ = ramification_bound;
  t.disconnected_ = disconnected_generating_function(base, degree_bound, ramification_bound);
  t.connected_ = connected_from_disconnected(t.disconnected_);
  return t;
}

Rational HurwitzTable::disconnected_coefficient(int r, const Partition& mu) const
{
  if (!covers(r, mu))
    throw InsufficientTable("(r=" + std::to_string(r) + ", mu=" + mu.to_string() +
                            ") outside table bounds");
  const TPoly* c = disconnected_.find(mu);
  return c ? c->at(r) : Rational(0);
}

Rational HurwitzTable::connected_coefficient(int r, const Partition& mu) const
{
  if (!covers(r, mu))
    throw InsufficientTable("(r=" + std::to_string(r) + ", mu=" + mu.to_string() +
                            ") outside table bounds");
  const TPoly* c = connected_.find(mu);
  return c ? c->at(r) : Rational(0);
}

Rational HurwitzTable::number(int g, const Partition& mu) const
{
  if (mu.empty())
    throw std::invalid_argument("hurwitz number needs at least one preimage");
  const int r = ramification_count(base_, g, mu);
  if (r < 0)
    throw NegativeRamification("r(g=" + std::to_string(g) + ", mu=" + mu.to_string() +
                               ") = " + std::to_string(r) + " < 0");
  return connected_coefficient(r, mu) * Rational(multiplicity_factorials(mu));
}

Rational HurwitzTable::number(int g, std::span<const int> mu) const
{
  return number(g, Partition::from_unsorted(std::vector<int>(mu.begin(), mu.end())));
}

Rational HurwitzTable::number_or_zero(int g, std::span<const int> mu) const
{
  if (g < 0 || mu.empty())
    return 0;
  const auto p = Partition::from_unsorted(std::vector<int>(mu.begin(), mu.end()));
  if (ramification_count(base_, g, p) < 0)
    return 0;
  return number(g, p);
}

std::vector<HurwitzEntry> HurwitzTable::entries() const
{
  std::vector<HurwitzEntry> out;
  for (const auto& [mu, c] : connected_.terms()) {
    for (int r = 0; r <= c.bound(); ++r) {
      if (c[r] == 0)
        continue;
      const auto g = genus_for(base_, r, mu);
      if (!g)
        throw std::logic_error("non-zero coefficient at (r=" + std::to_string(r) + ", mu=" +
                               mu.to_string() + ") has no integral genus");
      out.push_back({*g, mu, r, c[r] * Rational(multiplicity_factorials(mu))});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const HurwitzEntry& a, const HurwitzEntry& b) {
    if (a.mu != b.mu)
      return a.mu < b.mu;
    return a.genus < b.genus;
  });
  return out;
}

Rational hurwitz_number(const BaseCurve& base, int g, const Partition& mu)
{
  const int r = ramification_count(base, g, mu);
  if (r < 0)
    throw NegativeRamification("r(g, mu) < 0");
  return HurwitzTable::build(base, mu.size(), r).number(g, mu);
}

CajCheck verify_cut_and_join(const HurwitzTable& table, int g, std::span<const int> mu)
{
  const std::vector<int> parts(mu.begin(), mu.end());
  const int n = static_cast<int>(parts.size());
  const auto as_partition = Partition::from_unsorted(parts);
  const int r = ramification_count(table.base(), g, as_partition);
  if (r <= 0)
    return {CajStatus::Skipped, r, 0, 0};

  const Rational lhs = table.number(g, as_partition) * r;

  Rational cut = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j)
        continue;
      std::vector<int> merged{parts[i] + parts[j]};
      for (int k = 0; k < n; ++k)
        if (k != i && k != j)
          merged.push_back(parts[k]);
      cut += table.number_or_zero(g, merged) * (parts[i] + parts[j]);
    }

  Rational join = 0;
  for (int i = 0; i < n; ++i) {
    std::vector<int> others;
    for (int k = 0; k < n; ++k)
      if (k != i)
        others.push_back(parts[k]);
    const int rest = static_cast<int>(others.size());
    for (int alpha = 1; alpha < parts[i]; ++alpha) {
      const int beta = parts[i] - alpha;
      std::vector<int> split{alpha, beta};
      split.insert(split.end(), others.begin(), others.end());
      Rational bracket = table.number_or_zero(g - 1, split);
      for (int g1 = 0; g1 <= g; ++g1)
        for (unsigned mask = 0; mask < (1u << rest); ++mask) {
          std::vector<int> left{alpha}, right{beta};
          for (int k = 0; k < rest; ++k)
            ((mask >> k) & 1u ? left : right).push_back(others[static_cast<std::size_t>(k)]);
          const Rational a = table.number_or_zero(g1, left);
          if (a == 0)
            continue;
          bracket += a * table.number_or_zero(g - g1, right);
        }
      join += bracket * (alpha * beta);
    }
  }

  const Rational rhs = (cut + join) / 2;
  return {lhs == rhs ? CajStatus::Holds : CajStatus::Fails, r, lhs, rhs};
}

} // namespace hurwitz
