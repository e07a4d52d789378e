#pragma once

#include "hurwitz/power_series.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hurwitz {

struct UnsupportedEulerCharacteristic : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The power series y(x) with y(0) = 0 solving x = y^{chi-1} e^{-y}, through
/// x^order. Only chi = 2 (x = y e^{-y}) is supported.
PowerSeries lambert_inverse(int euler_characteristic, int order);

struct SeriesIdentity {
  std::string name;
  PowerSeries residual;
  bool holds = false;
};

struct SemiclassicalReport {
  int order = 0;
  PowerSeries y;
  PowerSeries s0;
  /// First-order WKB term with the logarithm's sign fixed by the transport
  /// equation: -y/2 - log(1 - y)/2.
  PowerSeries s1;
  /// Every identity below must hold.
  std::vector<SeriesIdentity> identities;
  /// The opposite-sign candidate -y/2 + log(1 - y)/2 checked against the
  /// transport equation; reported, never gating.
  SeriesIdentity opposite_sign_s1;
  bool holds = false;
};

/// Lambert back-substitution, S0' = y, the eikonal and transport equations,
/// the ODE y = -(y + 1 - chi) dy/du, the total symbol, and the derivative of
/// log(y + 1 - chi), all exactly through x^order. Primes are x d/dx.
SemiclassicalReport verify_S0_S1(int euler_characteristic, int order);

} // namespace hurwitz
