// Theta sums psi(u) = sum_{n>=1} exp(-pi u n^2) and
// theta(u) = sum_{n in Z} exp(-pi u n^2) = 1 + 2 psi(u).

#pragma once

namespace zeta {

struct ThetaValue {
  double value = 0.0;
  int terms_used = 0;
};

/// Below this argument psi is evaluated through the u <-> 1/u functional
/// equation instead of direct summation.
inline constexpr double kThetaReflectBelow = 0.05;

/// psi(u) for u > 0. Summation stops at the first N whose next term falls
/// below 1e-18 times the running sum. Throws DomainError for u <= 0.
ThetaValue psi(double u);

/// 1 + 2 psi(u).
double theta_full(double u);

/// psi(u) - [psi(1/u)/sqrt(u) + 1/(2 sqrt(u)) - 1/2], both sides summed
/// directly. Requires u in [kThetaReflectBelow, 1/kThetaReflectBelow].
double psi_functional_residual(double u);

}  // namespace zeta
