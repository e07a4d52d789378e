#include "hurwitz/semiclassical.hpp"

#include "printers.hpp"

#include <doctest.h>

using namespace hurwitz;

TEST_CASE("Lambert inverse")
{
  const PowerSeries y = lambert_inverse(2, 10);
  CHECK(y[0] == 0);
  for (int n = 1; n <= 10; ++n)
    CHECK(y[n] == pow(Rational(n), n - 1) / Rational(factorial(static_cast<unsigned>(n))));
  CHECK_THROWS_AS(lambert_inverse(0, 5), UnsupportedEulerCharacteristic);
  CHECK_THROWS_AS(lambert_inverse(2, 0), std::invalid_argument);
}

TEST_CASE("leading WKB terms")
{
  const SemiclassicalReport r = verify_S0_S1(2, 10);
  CHECK(r.holds);
  CHECK(r.identities.size() == 7);
  for (const auto& id : r.identities) {
    CAPTURE(id.name);
    CHECK(id.holds);
  }
  // S_1 = -y/2 - log(1 - y)/2 starts at y^2/4.
  CHECK(r.s1[1] == 0);
  CHECK(r.s1[2] == frac(1, 4));
  CHECK_THROWS_AS(verify_S0_S1(-2, 5), UnsupportedEulerCharacteristic);
}

TEST_CASE("opposite log sign in S1 fails transport by y/(1-y)")
{
  const SemiclassicalReport r = verify_S0_S1(2, 8);
  CHECK_FALSE(r.opposite_sign_s1.holds);
  const PowerSeries& res = r.opposite_sign_s1.residual;
  for (int n = 1; n <= 8; ++n) {
    const Rational expected = pow(Rational(n), n) / Rational(factorial(static_cast<unsigned>(n)));
    CHECK((res[n] == expected || res[n] == -expected));
  }
}
