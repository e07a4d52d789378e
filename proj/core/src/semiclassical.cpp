#include "hurwitz/semiclassical.hpp"

namespace hurwitz {

namespace {

void require_sphere(int euler_characteristic)
{
  if (euler_characteristic != 2)
    throw UnsupportedEulerCharacteristic("semiclassical analysis is implemented for chi = 2 only, got " +
                                         std::to_string(euler_characteristic));
}

SeriesIdentity identity(std::string name, PowerSeries residual)
{
  const bool ok = residual.is_zero();
  return {std::move(name), std::move(residual), ok};
}

} // namespace

PowerSeries lambert_inverse(int euler_characteristic, int order)
{
  require_sphere(euler_characteristic);
  if (order < 1)
    throw std::invalid_argument("order must be positive");
  // y = x e^y; each pass fixes one more coefficient.
  const PowerSeries x = PowerSeries::monomial(order, 1);
  PowerSeries y(order);
  for (int pass = 0; pass < order; ++pass)
    y = x * exp(y);
  return y;
}

SemiclassicalReport verify_S0_S1(int euler_characteristic, int order)
{
  require_sphere(euler_characteristic);
  const Rational twist = 1 - euler_characteristic;  // 1 - chi
  const Rational half = frac(1, 2);
  const PowerSeries x = PowerSeries::monomial(order, 1);
  const PowerSeries one = PowerSeries::constant(order, 1);

  SemiclassicalReport r;
  r.order = order;
  r.y = lambert_inverse(euler_characteristic, order);
  const PowerSeries& y = r.y;
  // With chi = 2, y + 1 - chi = y - 1 = -(1 - y); the log is taken of 1 - y and
  // the constant log(-1) is absorbed into the integration constant.
  const PowerSeries log_term = log(one - y);

  r.s0 = y * y * (-half) - y * twist;
  r.s1 = y * (-half) - log_term * half;
  const PowerSeries opposite = y * (-half) + log_term * half;

  const PowerSeries d_s0 = r.s0.euler();
  const auto transport = [&](const PowerSeries& s1) {
    const PowerSeries d_s1 = s1.euler();
    return d_s0.euler() * half - d_s0 * half + d_s0 * d_s1 + d_s1 * twist;
  };

  r.identities.push_back(identity("lambert back-substitution", y * exp(-y) - x));
  r.identities.push_back(identity("S0' = y", d_s0 - y));
  r.identities.push_back(identity("eikonal", r.s0 + d_s0 * d_s0 * half + d_s0 * twist));
  r.identities.push_back(identity("y = -(y + 1 - chi) dy/du", y + (y + one * twist) * y.euler()));
  r.identities.push_back(identity("transport", transport(r.s1)));
  r.identities.push_back(identity("total symbol", y - x * exp(y)));
  r.identities.push_back(
      identity("log derivative", log_term.euler() * (y + one * twist) - y.euler()));
  r.opposite_sign_s1 = identity("transport (opposite log sign)", transport(opposite));

  r.holds = true;
  for (const auto& id : r.identities)
    r.holds = r.holds && id.holds;
  return r;
}

} // namespace hurwitz
