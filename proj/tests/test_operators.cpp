#include "hurwitz/exp_laurent.hpp"
#include "hurwitz/operators.hpp"

#include "printers.hpp"

#include <doctest.h>

using namespace hurwitz;

TEST_CASE("exp-Laurent ring")
{
  const ExpLaurent f = ExpLaurent::basis(2, 1);
  const ExpLaurent df = ExpLaurent::basis(1, 1, 2) + ExpLaurent::basis(2, 1);
  CHECK(f.derivative() == df);
  CHECK(ExpLaurent::basis(-1, 0).derivative() == ExpLaurent::basis(-2, 0, -1));
  CHECK(f.times_exp(frac(1, 2)) == ExpLaurent::basis(2, frac(3, 2)));
  CHECK(f.times_hbar(-3) == ExpLaurent::basis(-1, 1));
  CHECK((f - f).is_zero());
  CHECK(ExpLaurent::basis(0, 2) * ExpLaurent::basis(1, -2) == ExpLaurent::basis(1, 0));
  // e^{2 hbar} = 1 + 2 hbar + 2 hbar^2 + ...
  const LaurentPoly e = ExpLaurent::basis(-1, 2).expand(2);
  CHECK(e.coefficient(-1) == 1);
  CHECK(e.coefficient(0) == 2);
  CHECK(e.coefficient(1) == 2);
  CHECK(e.coefficient(2) == frac(4, 3));
  CHECK(e.coefficient(3) == 0);
}

TEST_CASE("closed-form partition function coefficients")
{
  for (int h = 0; h <= 2; ++h) {
    const XSeries z = closed_form_Z(BaseCurve{h}, 5);
    for (int m = 0; m <= 5; ++m) {
      const Rational c = pow(Rational(factorial(static_cast<unsigned>(m))), 2 * h - 1);
      CHECK(z[m] == ExpLaurent::basis(m * (2 * h - 1), frac(m * (m - 1), 2), c));
    }
  }
}

TEST_CASE("operator generators")
{
  const XSeries b = XSeries::basis(6, 1, 2, 3);
  CHECK(OperatorExpr::euler_x().apply(b) == b * Rational(3));
  CHECK(OperatorExpr::mul_x().apply(b) == XSeries::basis(6, 1, 2, 4));
  CHECK(OperatorExpr::shift().apply(b) == XSeries::basis(6, 1, 5, 3));
  CHECK(OperatorExpr::dxx_pow(-1).apply(b) == b * frac(1, 4));
  CHECK(OperatorExpr::mul_hbar_pow(-2).apply(b) == XSeries::basis(6, -1, 2, 3));
  CHECK(OperatorExpr::mul_x().apply(XSeries::basis(3, 0, 0, 3)).is_zero());
  const OperatorExpr comp = OperatorExpr::compose({OperatorExpr::euler_x(), OperatorExpr::mul_x()});
  CHECK(comp.apply(b) == XSeries::basis(6, 1, 2, 4) * Rational(4));
  CHECK_FALSE(build_P(BaseCurve{1}).to_string().empty());
}

TEST_CASE("quantum curve, Schroedinger equation and first-order factor")
{
  for (int h = 0; h <= 2; ++h) {
    const BaseCurve base{h};
    const OperatorCheck pz = verify_PZ(base, 8);
    const OperatorCheck qz = verify_QZ(base, 8);
    const OperatorCheck p1 = verify_P1_identity(base, 8);
    CHECK(pz.holds);
    CHECK(qz.holds);
    CHECK(p1.holds);
    CHECK(pz.checked_through == 7);
    CHECK(pz.excluded_degree == std::optional<int>(8));
    CHECK(qz.checked_through == 8);
    CHECK_FALSE(qz.excluded_degree);
    CHECK(pz.residuals.size() == 9);
  }
}

TEST_CASE("commutator relation on a basis grid")
{
  const std::vector<Rational> rates{Rational(0), Rational(1), frac(3, 2), Rational(3)};
  for (int h = 0; h <= 2; ++h) {
    const CommutatorReport r =
        verify_commutator(BaseCurve{h}, basis_grid({-1, 0, 1, 2}, rates, {0, 1, 2, 3, 4, 5}));
    CHECK(r.holds);
    CHECK(r.checks.size() == 96);
  }
  CHECK_THROWS_AS(verify_commutator(BaseCurve{1}, {}), std::invalid_argument);
}

TEST_CASE("mode equation has a one-dimensional solution space")
{
  for (int h = 0; h <= 2; ++h)
    for (int m = 1; m <= 4; ++m) {
      const auto sol = solve_mode_equation(BaseCurve{h}, m);
      REQUIRE(sol.size() == 1);
      const ExpLaurent expected = ExpLaurent::basis(m * (2 * h - 1), frac(m * (m - 1), 2));
      const auto& terms = sol[0].terms();
      REQUIRE(terms.size() == 1);
      const auto& [rate, poly] = *terms.begin();
      REQUIRE(poly.terms().size() == 1);
      const Rational scale = poly.terms().begin()->second;
      CHECK(sol[0] == expected * scale);
    }
}
