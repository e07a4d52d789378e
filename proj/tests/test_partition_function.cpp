#include "hurwitz/partition_function.hpp"

#include "printers.hpp"

#include <doctest.h>

using namespace hurwitz;

TEST_CASE("diagonal partition function equals the closed form")
{
  CHECK(z_match(BaseCurve{0}, 4, 4).holds);
  CHECK(z_match(BaseCurve{1}, 4, 5).holds);
  CHECK(z_match(BaseCurve{2}, 3, 6).holds);
}

TEST_CASE("genus floor")
{
  CHECK(default_genus_floor(BaseCurve{0}) == 0);
  CHECK(default_genus_floor(BaseCurve{1}) == 1);
  const ZMatch drop_genus_zero = z_match(BaseCurve{0}, 3, 3, 1);
  CHECK_FALSE(drop_genus_zero.holds);
  CHECK_FALSE(drop_genus_zero.mismatches.empty());
  // No genus-zero covers exist over a base of positive genus.
  CHECK(z_match(BaseCurve{1}, 3, 4, 0).holds);
}

TEST_CASE("hbar expansion of the closed form")
{
  const HbarXSeries z = expand_in_hbar(closed_form_Z(BaseCurve{1}, 3), 5);
  // x^2 coefficient: 2 hbar^2 e^{hbar}.
  CHECK(z.coefficient(2, 2) == 2);
  CHECK(z.coefficient(2, 3) == 2);
  CHECK(z.coefficient(2, 4) == 1);
  CHECK(z.coefficient(2, 1) == 0);
  CHECK(z.coefficient(0, 0) == 1);
  const HbarXSeries diag = diagonal_partition_function(BaseCurve{1}, 3, 5);
  CHECK(diag == z);
}

TEST_CASE("closed-form partial sums converge")
{
  for (int h = 1; h <= 2; ++h) {
    const ConvergenceCheck c = convergence_smoke_test(BaseCurve{h});
    CHECK(c.holds);
    CHECK(c.relative_difference < 1e-10);
    CHECK(std::abs(c.hbar - std::complex<double>(-2 * 3.141592653589793, 0)) < 1e-12);
  }
}
