#include "hurwitz/free_energy.hpp"

#include <algorithm>
#include <numeric>

namespace hurwitz {

namespace {

std::vector<int> all_but(int n, std::initializer_list<int> skip)
{
  std::vector<int> out;
  for (int k = 0; k < n; ++k)
    if (std::find(skip.begin(), skip.end(), k) == skip.end())
      out.push_back(k);
  return out;
}

MultiPoly monomial(int n, std::initializer_list<int> variables)
{
  MultiPoly::Exponents e(static_cast<std::size_t>(n), 0);
  for (int v : variables)
    ++e[static_cast<std::size_t>(v)];
  MultiPoly out(n);
  out.add_term(e, 1);
  return out;
}

void require_positive_base(const BaseCurve& base, const char* what)
{
  if (base.genus < 1)
    throw std::invalid_argument(std::string(what) + " needs a base of genus >= 1");
}

} // namespace

FreeEnergyFamily::FreeEnergyFamily(HurwitzTable table) : table_(std::move(table)) {}

FreeEnergyFamily FreeEnergyFamily::for_complexity(const BaseCurve& base, int max_complexity,
                                                  int degree_bound)
{
  const int c = std::max(max_complexity, 0);
  if (base.genus == 0)
    return FreeEnergyFamily(HurwitzTable::build(base, degree_bound, c + degree_bound));
  return FreeEnergyFamily(HurwitzTable::build(base, std::max(c / base.twist(), 1), c));
}

int FreeEnergyFamily::degree_bound(int g, int n) const
{
  if (base().genus == 0)
    return table_.degree_bound();
  const int c = 2 * g - 2 + n;
  return c < 0 ? 0 : c / base().twist();
}

const FreeEnergy& FreeEnergyFamily::get(int g, int n)
{
  const auto key = std::make_pair(g, n);
  if (auto it = cache_.find(key); it != cache_.end())
    return it->second;

  FreeEnergy f;
  f.base = base();
  f.genus = g;
  f.n = n;
  f.poly = MultiPoly(std::max(n, 0));
  if (g >= 0 && n >= 1) {
    f.degree_bound = degree_bound(g, n);
    f.truncated = base().genus == 0;
    for (int d = n; d <= f.degree_bound; ++d)
      for (const auto& mu : enumerate_partitions(d)) {
        if (mu.length() != n)
          continue;
        const int r = ramification_count(base(), g, mu);
        if (r < 0)
          continue;
        const Rational value = table_.number(g, mu);
        if (value == 0)
          continue;
        std::vector<int> e(mu.parts().begin(), mu.parts().end());
        std::sort(e.begin(), e.end());
        do {
          f.poly.add_term(e, value);
        } while (std::next_permutation(e.begin(), e.end()));
      }
  }
  return cache_.emplace(key, std::move(f)).first->second;
}

FreeEnergy build_free_energy(const BaseCurve& base, int g, int n, int degree_bound)
{
  FreeEnergyFamily family = FreeEnergyFamily::for_complexity(base, 2 * g - 2 + n, degree_bound);
  return family.get(g, n);
}

PdeReport verify_pde(FreeEnergyFamily& family, int g, int n)
{
  const int complexity = 2 * g - 2 + n;
  if (complexity <= 0 || n < 1)
    throw std::invalid_argument("verify_pde needs n >= 1 and 2g-2+n > 0");
  const BaseCurve& base = family.base();
  const FreeEnergy& F = family.get(g, n);

  PdeReport report;
  report.base = base;
  report.genus = g;
  report.n = n;
  report.truncated = F.truncated;
  report.max_degree = F.degree_bound;
  if (base.genus >= 1 && complexity % base.twist() == 0)
    report.kernel_degree = complexity / base.twist();

  report.lhs = MultiPoly(n);
  for (const auto& [e, c] : F.poly.terms()) {
    const int d = std::accumulate(e.begin(), e.end(), 0);
    report.lhs.add_term(e, c * (complexity - base.twist() * d));
  }

  MultiPoly rhs(n);
  // Cut: 1/2 sum_{i != j} x_i x_j / (x_i - x_j) (d_i F(x_[^j]) - d_j F(x_[^i])).
  if (n >= 2) {
    const MultiPoly& lower = family.get(g, n - 1).poly;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j)
          continue;
        const MultiPoly a = lower.substitute(all_but(n, {j}), n).partial(i);
        const MultiPoly b = lower.substitute(all_but(n, {i}), n).partial(j);
        rhs += (a - b).divide_by_difference(i, j) * monomial(n, {i, j}) * frac(1, 2);
      }
  }
  // Join: 1/2 sum_i (u1 d/du1)(u2 d/du2)|_{u1=u2=x_i} [F_{g-1,n+1} + sum F F].
  for (int i = 0; i < n; ++i) {
    const std::vector<int> others = all_but(n, {i});
    const int rest = n - 1;
    MultiPoly bracket(n);
    if (g >= 1) {
      std::vector<int> target{i, i};
      target.insert(target.end(), others.begin(), others.end());
      bracket += family.get(g - 1, n + 1).poly.euler(0).euler(1).substitute(target, n);
    }
    for (int g1 = 0; g1 <= g; ++g1)
      for (unsigned mask = 0; mask < (1u << rest); ++mask) {
        std::vector<int> left{i}, right{i};
        for (int k = 0; k < rest; ++k)
          ((mask >> k) & 1u ? left : right).push_back(others[static_cast<std::size_t>(k)]);
        const MultiPoly& f1 = family.get(g1, static_cast<int>(left.size())).poly;
        if (f1.is_zero())
          continue;
        const MultiPoly& f2 = family.get(g - g1, static_cast<int>(right.size())).poly;
        if (f2.is_zero())
          continue;
        bracket += f1.euler(0).substitute(left, n) * f2.euler(0).substitute(right, n);
      }
    rhs += bracket * frac(1, 2);
  }
  report.rhs = F.truncated ? rhs.truncated(report.max_degree) : rhs;

  int top = report.max_degree;
  if (!F.truncated)
    top = std::max({top, report.rhs.total_degree(), report.lhs.total_degree()});
  report.holds = true;
  for (int d = 0; d <= top; ++d) {
    PdeLayer layer;
    layer.degree = d;
    layer.lhs = report.lhs.homogeneous_part(d);
    layer.rhs = report.rhs.homogeneous_part(d);
    layer.kernel = report.kernel_degree && *report.kernel_degree == d;
    layer.holds = layer.lhs == layer.rhs && (!layer.kernel || layer.lhs.is_zero());
    if (!layer.holds && !report.first_failure)
      report.first_failure = d;
    report.holds = report.holds && layer.holds;
    report.layers.push_back(std::move(layer));
  }
  return report;
}

PdeReport verify_pde(const BaseCurve& base, int g, int n, int degree_bound)
{
  FreeEnergyFamily family = FreeEnergyFamily::for_complexity(base, 2 * g - 2 + n, degree_bound);
  return verify_pde(family, g, n);
}

namespace {

/// S_m without the m >= 2h precondition; zero below that range.
PowerSeries diagonal_S_unchecked(FreeEnergyFamily& family, int m, int bound)
{
  PowerSeries out(bound);
  for (int g = 0; 2 * g <= m; ++g) {
    const int n = m + 1 - 2 * g;
    if (n < 1)
      continue;
    Rational scale(Integer(1), factorial(static_cast<unsigned>(n)));
    scale.canonicalize();
    out += family.get(g, n).poly.diagonal(bound) * scale;
  }
  return out;
}

} // namespace

PowerSeries diagonal_S(FreeEnergyFamily& family, int m)
{
  require_positive_base(family.base(), "diagonal_S");
  if (m < 2 * family.base().genus)
    throw std::invalid_argument("diagonal_S needs m >= 2h");
  return diagonal_S_unchecked(family, m, m);
}

PowerSeries diagonal_S(const BaseCurve& base, int m)
{
  require_positive_base(base, "diagonal_S");
  FreeEnergyFamily family = FreeEnergyFamily::for_complexity(base, m - 1);
  return diagonal_S(family, m);
}

SRecursionCheck verify_S_recursion(FreeEnergyFamily& family, int m)
{
  const BaseCurve& base = family.base();
  require_positive_base(base, "verify_S_recursion");
  if (m < 2 * base.genus)
    throw std::invalid_argument("verify_S_recursion needs m >= 2h");
  const int bound = m + 2;
  std::vector<PowerSeries> S;
  for (int k = 0; k <= m + 1; ++k)
    S.push_back(k == 0 ? PowerSeries(bound) : diagonal_S_unchecked(family, k, bound));

  SRecursionCheck out;
  out.m = m;
  out.lhs = S[static_cast<std::size_t>(m + 1)] * Rational(m) -
            S[static_cast<std::size_t>(m + 1)].euler() * Rational(base.twist());
  // x^2 d^2/dx^2 = (x d/dx)^2 - x d/dx
  const PowerSeries& Sm = S[static_cast<std::size_t>(m)];
  out.rhs = (Sm.euler().euler() - Sm.euler()) * frac(1, 2);
  for (int m1 = 1; m1 <= m; ++m1)
    out.rhs += S[static_cast<std::size_t>(m1)].euler() *
               S[static_cast<std::size_t>(m + 1 - m1)].euler() * frac(1, 2);
  out.holds = out.lhs == out.rhs;
  return out;
}

SRecursionCheck verify_S_recursion(const BaseCurve& base, int m)
{
  require_positive_base(base, "verify_S_recursion");
  FreeEnergyFamily family = FreeEnergyFamily::for_complexity(base, m);
  return verify_S_recursion(family, m);
}

} // namespace hurwitz
