#include "zeta/theta.hpp"

#include "zeta/numerics.hpp"

#include <cmath>
#include <numbers>

namespace zeta {

namespace {

constexpr double kRelativeCutoff = 1e-18;

void require_positive(double u) {
  if (!(u > 0.0) || !std::isfinite(u)) throw DomainError("theta argument must be positive");
}

ThetaValue psi_direct(double u) {
  const double rate = std::numbers::pi * u;
  ThetaValue out;
  double sum = 0.0;
  for (int n = 1;; ++n) {
    sum += std::exp(-rate * n * n);
    const double next = std::exp(-rate * (n + 1.0) * (n + 1.0));
    if (next < kRelativeCutoff * (sum + 1e-300)) {
      out.terms_used = n;
      break;
    }
  }
  out.value = sum;
  return out;
}

}  // namespace

ThetaValue psi(double u) {
  require_positive(u);
  if (u >= kThetaReflectBelow) return psi_direct(u);
  const double root = std::sqrt(u);
  const ThetaValue dual = psi_direct(1.0 / u);
  return {dual.value / root + 0.5 / root - 0.5, dual.terms_used};
}

double theta_full(double u) { return 1.0 + 2.0 * psi(u).value; }

double psi_functional_residual(double u) {
  require_positive(u);
  if (u < kThetaReflectBelow || u > 1.0 / kThetaReflectBelow)
    throw DomainError("functional residual needs u in [0.05, 20]");
  const double root = std::sqrt(u);
  return psi_direct(u).value - (psi_direct(1.0 / u).value / root + 0.5 / root - 0.5);
}

}  // namespace zeta
