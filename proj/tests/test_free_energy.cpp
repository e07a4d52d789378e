#include "hurwitz/free_energy.hpp"

#include "printers.hpp"

#include <doctest.h>

using namespace hurwitz;

TEST_CASE("one-point genus-zero free energy over P^1")
{
  const FreeEnergy f = build_free_energy(BaseCurve{0}, 0, 1, 6);
  CHECK(f.truncated);
  CHECK(f.degree_bound == 6);
  for (int d = 1; d <= 6; ++d)
    CHECK(f.poly.coefficient({d}) ==
          pow(Rational(d), d - 2) / Rational(factorial(static_cast<unsigned>(d))));
}

TEST_CASE("free energies are symmetric polynomials of bounded degree")
{
  FreeEnergyFamily family = FreeEnergyFamily::for_complexity(BaseCurve{1}, 4);
  const FreeEnergy& f11 = family.get(1, 1);
  CHECK_FALSE(f11.truncated);
  CHECK(f11.poly.total_degree() == 1);
  CHECK(f11.poly.coefficient({1}) == 1);
  for (auto [g, n] : {std::pair{1, 3}, {2, 2}, {0, 6}, {1, 2}}) {
    const FreeEnergy& f = family.get(g, n);
    CHECK(f.poly.is_symmetric());
    CHECK(f.poly.total_degree() <= 2 * g - 2 + n);
  }
  CHECK(family.degree_bound(2, 2) == 4);
  CHECK(family.get(-1, 2).poly.is_zero());
}

TEST_CASE("labeled two-point numbers")
{
  // F_{1,2} over an elliptic base: H_{1,2}(1,1) = 3 and the diagonal
  // reproduces 3 x^2 with the 1/2! of the generating series.
  FreeEnergyFamily family = FreeEnergyFamily::for_complexity(BaseCurve{1}, 2);
  const FreeEnergy& f = family.get(1, 2);
  CHECK(f.poly.coefficient({1, 1}) == 3);
  CHECK(f.poly.diagonal(4).at(2) == 3);
}

TEST_CASE("Laplace-transformed cut-and-join holds layer by layer")
{
  for (int h = 1; h <= 2; ++h) {
    FreeEnergyFamily family = FreeEnergyFamily::for_complexity(BaseCurve{h}, 4);
    for (int c = 1; c <= 4; ++c)
      for (int g = 0; 2 * g <= c + 1; ++g) {
        const int n = c + 2 - 2 * g;
        const PdeReport r = verify_pde(family, g, n);
        CAPTURE(h);
        CAPTURE(g);
        CAPTURE(n);
        CHECK(r.holds);
        CHECK_FALSE(r.first_failure);
        if (!r.layers.empty() && r.kernel_degree) {
          const PdeLayer& top = r.layers.back();
          CHECK(top.kernel);
          CHECK(top.lhs.is_zero());
          CHECK(top.rhs.is_zero());
        }
      }
  }
  const PdeReport sphere = verify_pde(BaseCurve{0}, 0, 3, 5);
  CHECK(sphere.holds);
  CHECK_THROWS_AS(verify_pde(BaseCurve{1}, 0, 2, 4), std::invalid_argument);
}

TEST_CASE("diagonal S functions and their recursion")
{
  FreeEnergyFamily family = FreeEnergyFamily::for_complexity(BaseCurve{1}, 6);
  for (int m = 2; m <= 5; ++m)
    CHECK(verify_S_recursion(family, m).holds);
  const PowerSeries s2 = diagonal_S(family, 2);
  CHECK(s2.at(1) == 1);
  CHECK_THROWS_AS(diagonal_S(family, 1), std::invalid_argument);
  CHECK_THROWS_AS(diagonal_S(BaseCurve{0}, 3), std::invalid_argument);
  CHECK(verify_S_recursion(BaseCurve{2}, 4).holds);
}
