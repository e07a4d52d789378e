#include "hurwitz/hurwitz.hpp"
#include "hurwitz/oracle.hpp"

#include "printers.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace hurwitz;

namespace {

// Hurwitz's formula over P^1: prod mu_i^mu_i / mu_i! * d^{n-3}.
Rational genus_zero_formula(const Partition& mu)
{
  Rational v = pow(Rational(mu.size()), mu.length() - 3);
  for (int m : mu.parts())
    v *= pow(Rational(m), m) / Rational(factorial(static_cast<unsigned>(m)));
  return v;
}

long sigma(int n)
{
  long s = 0;
  for (int k = 1; k <= n; ++k)
    if (n % k == 0)
      s += k;
  return s;
}

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b)
{
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    c[i] = a[static_cast<std::size_t>(b[i])];
  return c;
}

Partition cycle_type(const Perm& p)
{
  std::vector<int> seen(p.size(), 0), parts;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i])
      continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = 1;
      ++len;
    }
    parts.push_back(len);
  }
  return Partition::from_unsorted(parts);
}

bool transitive(int d, const std::vector<Perm>& gens)
{
  std::vector<int> reach(static_cast<std::size_t>(d), 0);
  std::vector<int> stack{0};
  reach[0] = 1;
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    for (const auto& g : gens)
      if (!reach[static_cast<std::size_t>(g[static_cast<std::size_t>(i)])]) {
        reach[static_cast<std::size_t>(g[static_cast<std::size_t>(i)])] = 1;
        stack.push_back(g[static_cast<std::size_t>(i)]);
      }
  }
  return std::all_of(reach.begin(), reach.end(), [](int x) { return x; });
}

// Direct tuple enumeration over P^1: r transpositions whose product is the
// inverse of sigma, counted by the cycle type of sigma, divided by d!.
Rational brute_force_sphere(const Partition& mu, int r, bool connected)
{
  const int d = mu.size();
  std::vector<Perm> transpositions;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Perm t(static_cast<std::size_t>(d));
      std::iota(t.begin(), t.end(), 0);
      std::swap(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)]);
      transpositions.push_back(t);
    }
  if (transpositions.empty() && r > 0)
    return 0;
  long count = 0;
  std::vector<std::size_t> idx(static_cast<std::size_t>(r), 0);
  const std::size_t m = transpositions.size();
  while (true) {
    Perm prod(static_cast<std::size_t>(d));
    std::iota(prod.begin(), prod.end(), 0);
    std::vector<Perm> gens;
    for (auto k : idx) {
      prod = compose(prod, transpositions[k]);
      gens.push_back(transpositions[k]);
    }
    if (cycle_type(prod) == mu && (!connected || transitive(d, gens)))
      ++count;
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == m)
      idx[pos++] = 0;
    if (pos == idx.size())
      break;
  }
  return Rational(count) / Rational(factorial(static_cast<unsigned>(d)));
}

} // namespace

TEST_CASE("ramification count and genus inversion")
{
  const BaseCurve sphere{0}, torus{1}, two{2};
  CHECK(ramification_count(sphere, 0, Partition{2, 1}) == 3);
  CHECK(ramification_count(torus, 1, Partition{1, 1, 1}) == 0);
  CHECK(ramification_count(two, 2, Partition{1}) == 0);
  CHECK(ramification_count(two, 1, Partition{1}) == -2);
  CHECK(genus_for(sphere, 3, Partition{2, 1}) == 0);
  CHECK(genus_for(torus, 1, Partition{2}) == std::optional<int>(2));
  CHECK(genus_for(torus, 0, Partition{2}) == std::nullopt);
  CHECK(genus_for(torus, 2, Partition{2}) == std::nullopt);
}

TEST_CASE("genus-zero numbers over P^1 follow Hurwitz's formula")
{
  const HurwitzTable table = HurwitzTable::build(BaseCurve{0}, 6, 10);
  for (int d = 1; d <= 6; ++d)
    for (const auto& mu : enumerate_partitions(d)) {
      if (ramification_count(BaseCurve{0}, 0, mu) > 10)
        continue;
      CAPTURE(mu.to_string());
      CHECK(table.number(0, mu) == genus_zero_formula(mu));
    }
}

TEST_CASE("unramified-profile genus-one numbers over an elliptic base")
{
  const HurwitzTable table = HurwitzTable::build(BaseCurve{1}, 7, 0);
  for (int n = 1; n <= 7; ++n)
    CHECK(table.number(1, Partition::ones(n)) ==
          Rational(factorial(static_cast<unsigned>(n - 1)) * sigma(n)));
  const HeatSeries cheap = connected_trivial_profile(BaseCurve{1}, 7, 0);
  for (int n = 1; n <= 7; ++n)
    CHECK(cheap.find(Partition::ones(n))->at(0) == table.connected_coefficient(0, Partition::ones(n)));
}

TEST_CASE("table entries agree with a direct enumeration over P^1")
{
  const HurwitzTable table = HurwitzTable::build(BaseCurve{0}, 4, 4);
  for (int d = 1; d <= 4; ++d)
    for (const auto& mu : enumerate_partitions(d))
      for (int r = 0; r <= 4; ++r) {
        const Rational scale(factorial(static_cast<unsigned>(r)));
        CHECK(table.disconnected_coefficient(r, mu) * scale == brute_force_sphere(mu, r, false));
        CHECK(table.connected_coefficient(r, mu) * scale == brute_force_sphere(mu, r, true));
      }
}

TEST_CASE("generating function solves the heat equation")
{
  for (int h = 0; h <= 2; ++h) {
    const HeatSeries f = disconnected_generating_function(BaseCurve{h}, 5, 5);
    CHECK(heat_residual(f).is_zero());
    HeatSeries broken = f;
    TPoly bump(5);
    bump[1] = 1;
    broken.add_term(Partition{2, 1}, bump);
    CHECK_FALSE(heat_residual(broken).is_zero());
  }
}

TEST_CASE("connected and disconnected series are exp/log related")
{
  const HurwitzTable table = HurwitzTable::build(BaseCurve{1}, 4, 3);
  CHECK(connected_from_disconnected(table.disconnected()) == table.connected());
}

TEST_CASE("lookups outside the table are reported")
{
  const HurwitzTable table = HurwitzTable::build(BaseCurve{1}, 3, 2);
  CHECK_THROWS_AS(table.number(0, Partition{1}), NegativeRamification);
  CHECK_THROWS_AS(table.number(4, Partition{1, 1}), InsufficientTable);
  CHECK(table.number_or_zero(0, std::vector<int>{1}) == 0);
  CHECK(table.number_or_zero(-1, std::vector<int>{1}) == 0);
  CHECK(table.number(2, std::vector<int>{1, 1}) == table.number(2, Partition{1, 1}));
}

TEST_CASE("labeled preimages multiply by multiplicity factorials")
{
  const HurwitzTable table = HurwitzTable::build(BaseCurve{0}, 4, 4);
  CHECK(table.number(0, Partition{1, 1, 1}) ==
        table.connected_coefficient(4, Partition{1, 1, 1}) * Rational(6));
  CHECK(hurwitz_number(BaseCurve{0}, 0, Partition{2, 1}) == frac(2, 3));
}

TEST_CASE("cut-and-join recursion holds on the table")
{
  for (int h = 0; h <= 2; ++h) {
    const HurwitzTable table = HurwitzTable::build(BaseCurve{h}, 4, 10);
    int checked = 0;
    for (int d = 1; d <= 4; ++d)
      for (const auto& mu : enumerate_partitions(d))
        for (int g = 0; g <= 3; ++g) {
          if (ramification_count(BaseCurve{h}, g, mu) > 10)
            continue;
          const CajCheck c = verify_cut_and_join(table, g, mu.parts());
          CHECK(c.status != CajStatus::Fails);
          checked += c.status == CajStatus::Holds;
        }
    CHECK(checked > 0);
  }
}
