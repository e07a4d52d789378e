#include "hurwitz/hurwitz.hpp"
#include "hurwitz/oracle.hpp"

#include "printers.hpp"

#include <doctest.h>

using namespace hurwitz;

namespace {

// Frobenius: (1/d!) #{prod of h commutators = 1} = sum_lambda (d!/dim)^{2h-2}.
Rational class_sum_formula(int h, int d)
{
  Rational s = 0;
  for (const auto& l : enumerate_partitions(d))
    s += pow(Rational(factorial(static_cast<unsigned>(d))) / Rational(dim_of(l)), 2 * h - 2);
  return s;
}

} // namespace

TEST_CASE("commutator class sums")
{
  for (int h = 0; h <= 2; ++h)
    for (int d = 1; d <= (h == 2 ? 4 : 5); ++d)
      CHECK(oracle::count_class_sums(h, d) == class_sum_formula(h, d));
}

TEST_CASE("single covers")
{
  CHECK(oracle::count_covers({1, Partition{1}, 0, true}) == 1);
  CHECK(oracle::count_covers({0, Partition{2}, 1, true}) == frac(1, 2));
  CHECK(oracle::count_covers({1, Partition{1, 1}, 0, false}) == 2);
  CHECK(oracle::count_covers({1, Partition{1, 1}, 0, true}) == frac(3, 2));
}

TEST_CASE("census agrees with the heat-equation table")
{
  for (int h = 0; h <= 2; ++h) {
    const HurwitzTable table = HurwitzTable::build(BaseCurve{h}, 3, 3);
    for (int d = 1; d <= 3; ++d)
      for (int r = 0; r <= 3; ++r) {
        const oracle::Census c = oracle::census(h, d, r);
        const Rational inv = Rational(1) / Rational(factorial(static_cast<unsigned>(d)));
        const Rational rf(factorial(static_cast<unsigned>(r)));
        for (const auto& mu : enumerate_partitions(d)) {
          CHECK(Rational(c.all.at(mu)) * inv == table.disconnected_coefficient(r, mu) * rf);
          CHECK(Rational(c.transitive.at(mu)) * inv == table.connected_coefficient(r, mu) * rf);
        }
      }
  }
}

TEST_CASE("budget and degree limits")
{
  CHECK(oracle::estimated_steps(2, 5, 4) > 1000);
  CHECK_THROWS_AS(oracle::census(2, 5, 4, 1000), oracle::BudgetExceeded);
  CHECK_THROWS_AS(oracle::census(0, 6, 0), std::invalid_argument);
  CHECK_THROWS_AS(oracle::census(0, 0, 0), std::invalid_argument);
  CHECK(oracle::estimated_steps(1, 4, 2) < oracle::estimated_steps(1, 4, 3));
}
