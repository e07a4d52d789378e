// Runs the thirteen acceptance criteria, printing one PASS/FAIL line each.
#include "hurwitz/free_energy.hpp"
#include "hurwitz/hurwitz.hpp"
#include "hurwitz/operators.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/partition_function.hpp"
#include "hurwitz/semiclassical.hpp"
#include "hurwitz/symfun.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace hurwitz;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Verdict()> run;
};

Verdict fail(std::string why) { return {false, std::move(why)}; }

long sigma(int n)
{
  long s = 0;
  for (int k = 1; k <= n; ++k)
    if (n % k == 0)
      s += k;
  return s;
}

Verdict elliptic_sequence()
{
  static const long listed[] = {1, 3, 8, 42, 144, 1440, 5760, 75600, 524160, 6531840};
  for (int n = 1; n <= 10; ++n) {
    const Rational value = hurwitz_number(BaseCurve{1}, 1, Partition::ones(n));
    const Rational formula(factorial(static_cast<unsigned>(n - 1)) * sigma(n));
    if (value != formula || value != listed[n - 1])
      return fail("n=" + std::to_string(n) + " gives " + to_string(value));
  }
  return {true, "n = 1..10"};
}

Verdict oracle_equivalence()
{
  int cells = 0, comparisons = 0;
  for (int h = 0; h <= 2; ++h) {
    int r_max = 0;
    while (oracle::estimated_steps(h, 4, r_max + 1) <= oracle::kDefaultBudget)
      ++r_max;
    const HurwitzTable table = HurwitzTable::build(BaseCurve{h}, 4, r_max);
    for (int d = 1; d <= 4; ++d)
      for (int r = 0; oracle::estimated_steps(h, d, r) <= oracle::kDefaultBudget && r <= r_max; ++r) {
        const oracle::Census census = oracle::census(h, d, r);
        ++cells;
        const Rational inv_d = Rational(1) / Rational(factorial(static_cast<unsigned>(d)));
        const Rational r_fact(factorial(static_cast<unsigned>(r)));
        for (const auto& mu : enumerate_partitions(d)) {
          ++comparisons;
          const Rational counted = Rational(census.all.at(mu)) * inv_d;
          if (counted != table.disconnected_coefficient(r, mu) * r_fact)
            return fail("h=" + std::to_string(h) + " mu=" + mu.to_string() + " r=" + std::to_string(r));
        }
      }
  }
  return {true, std::to_string(comparisons) + " coefficients over " + std::to_string(cells) + " cells"};
}

Verdict cut_and_join_recursion()
{
  int checked = 0;
  for (int h = 1; h <= 2; ++h) {
    const BaseCurve base{h};
    int r_max = 0;
    for (int d = 1; d <= 4; ++d)
      for (const auto& mu : enumerate_partitions(d))
        r_max = std::max(r_max, ramification_count(base, 4, mu));
    const HurwitzTable table = HurwitzTable::build(base, 4, r_max);
    for (int d = 1; d <= 4; ++d)
      for (const auto& mu : enumerate_partitions(d))
        for (int g = 0; g <= 4; ++g) {
          const CajCheck c = verify_cut_and_join(table, g, mu.parts());
          if (c.status == CajStatus::Fails)
            return fail("h=" + std::to_string(h) + " g=" + std::to_string(g) + " mu=" + mu.to_string());
          checked += c.status == CajStatus::Holds;
        }
  }
  return {checked > 0, std::to_string(checked) + " instances"};
}

Verdict pde_layers()
{
  FreeEnergyFamily family = FreeEnergyFamily::for_complexity(BaseCurve{1}, 5);
  int cases = 0;
  for (int c = 1; c <= 5; ++c)
    for (int g = 0; 2 * g <= c + 1; ++g) {
      const int n = c + 2 - 2 * g;
      const PdeReport r = verify_pde(family, g, n);
      const std::string where = "(g,n)=(" + std::to_string(g) + "," + std::to_string(n) + ")";
      if (!r.holds)
        return fail(where + " fails at degree " + std::to_string(r.first_failure.value_or(-1)));
      if (!r.kernel_degree || r.layers.empty())
        return fail(where + " has no kernel layer");
      const PdeLayer& top = r.layers.back();
      if (top.degree != *r.kernel_degree || !top.lhs.is_zero() || !top.rhs.is_zero())
        return fail(where + " top layer is not annihilated on both sides");
      ++cases;
    }
  return {true, std::to_string(cases) + " (g,n) pairs"};
}

Verdict eigenfunction()
{
  int count = 0;
  for (int d = 1; d <= 6; ++d)
    for (const auto& mu : enumerate_partitions(d)) {
      const SymFun s = schur(mu, 6);
      if (!(cut_and_join(s) == s * frac(shifted_p2(mu), 2)))
        return fail("mu=" + mu.to_string());
      ++count;
    }
  return {true, std::to_string(count) + " Schur functions"};
}

Verdict operators()
{
  for (int h = 0; h <= 2; ++h)
    for (const OperatorCheck& c : {verify_PZ(BaseCurve{h}, 8), verify_QZ(BaseCurve{h}, 8),
                                   verify_P1_identity(BaseCurve{h}, 8)})
      if (!c.holds || c.checked_through < 7)
        return fail("h=" + std::to_string(h) + " " + c.name);
  return {true, "P Z, Q Z, P-factor for h = 0, 1, 2 with M = 8"};
}

Verdict commutator()
{
  const auto grid = basis_grid({-1, 0, 1, 2}, {Rational(0), Rational(1), frac(3, 2), Rational(3)},
                               {0, 1, 2, 3, 4, 5});
  for (int h = 0; h <= 2; ++h)
    if (!verify_commutator(BaseCurve{h}, grid).holds)
      return fail("h=" + std::to_string(h));
  return {true, std::to_string(grid.size()) + " basis elements per base"};
}

Verdict closed_form()
{
  const ZMatch m = z_match(BaseCurve{1}, 5, 6);
  if (!m.holds) {
    const auto [x, k] = m.mismatches.front();
    return fail(std::to_string(m.mismatches.size()) + " mismatches, first at x^" + std::to_string(x) +
                " hbar^" + std::to_string(k));
  }
  return {true, "x^0..x^5, hbar up to 6"};
}

Verdict s_recursion()
{
  FreeEnergyFamily family = FreeEnergyFamily::for_complexity(BaseCurve{1}, 6);
  for (int m = 2; m <= 5; ++m)
    if (!verify_S_recursion(family, m).holds)
      return fail("m=" + std::to_string(m));
  return {true, "m = 2..5"};
}

Verdict euler_function()
{
  const EllipticF1Check c = elliptic_F1_series(20);
  return {c.matches, "through q^20"};
}

Verdict semiclassical()
{
  const PowerSeries y = lambert_inverse(2, 10);
  const PowerSeries x = PowerSeries::monomial(10, 1);
  if (!(y * exp(-y) - x).is_zero())
    return fail("Lambert back-substitution");
  const SemiclassicalReport r = verify_S0_S1(2, 10);
  for (const auto& id : r.identities)
    if (!id.holds)
      return fail(id.name);
  return {true, std::string("through x^10; opposite log sign in S1 ") +
                    (r.opposite_sign_s1.holds ? "also holds" : "fails transport")};
}

Verdict quasimodular()
{
  const QuasimodularFit fit = quasimodular_fit(elliptic_Fg_series(2, 12), 6, 4);
  if (!fit.ok)
    return fail(fit.diagnostic);
  for (int k = 5; k <= 12; ++k)
    if (std::find(fit.checked.begin(), fit.checked.end(), k) == fit.checked.end())
      return fail("q^" + std::to_string(k) + " not predicted");
  std::ostringstream s;
  s << "F_2 =";
  for (std::size_t i = 0; i < fit.basis.size(); ++i)
    s << (i ? " + " : " ") << "(" << to_string(fit.coefficients[i]) << ")" << basis_label(fit.basis[i]);
  return {true, s.str()};
}

Verdict convergence()
{
  std::ostringstream s;
  for (int h = 1; h <= 2; ++h) {
    const ConvergenceCheck c = convergence_smoke_test(BaseCurve{h});
    s << "h=" << h << " rel " << c.relative_difference << (h == 1 ? ", " : "");
    if (!c.holds)
      return fail(s.str());
  }
  return {true, s.str()};
}

} // namespace

int main()
{
  const std::vector<Criterion> criteria{
      {1, "elliptic genus-one sequence", 5, elliptic_sequence},
      {2, "oracle equivalence", 300, oracle_equivalence},
      {3, "cut-and-join recursion", 60, cut_and_join_recursion},
      {4, "free-energy PDE with kernel layer", 60, pde_layers},
      {5, "Schur eigenfunction identity", 30, eigenfunction},
      {6, "quantum curve and Schroedinger equation", 10, operators},
      {7, "commutator relation", 10, commutator},
      {8, "closed-form partition function match", 120, closed_form},
      {9, "S recursion", 60, s_recursion},
      {10, "Euler function identity", 5, euler_function},
      {11, "semi-classical limit", 5, semiclassical},
      {12, "quasimodular fit", 120, quasimodular},
      {13, "convergence smoke test", 1, convergence},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = fail(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (v.ok && seconds > c.limit_seconds) {
      v.ok = false;
      v.detail += " (over time limit)";
    }
    failures += !v.ok;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs/%gs", seconds, c.limit_seconds);
    std::cout << (v.ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << timing
              << "): " << v.detail << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
