// Completed zeta function through the theta integral
//
//   beth(s) = 1 + 2 s(s-1) int_1^inf u^(-3/4) psi(u) cosh((s-1/2) ln(u)/2) du,
//
// which is entire and symmetric under s -> 1-s, together with the factor
// Phi(s) = 2 pi^(-s/2) Gamma(s/2+1) (s-1) linking it to the continuation:
// beth(s) = Phi(s) * zeta(s).

#pragma once

#include "zeta/numerics.hpp"

namespace zeta {

struct BethResult {
  Complex value;
  double err_est = 0.0;  // quadrature error estimate scaled by 2|s(s-1)|
  bool converged = true;
};

/// Throws DomainError("phi pole (trivial-zero abscissa)") for s = -2, -4, ...
Complex phi_factor(const Complex& s);

/// The cosh kernel is split as cosh(x + iy) = cosh x cos y + i sinh x sin y
/// and the two real parts are integrated separately.
BethResult beth(const Complex& s, const QuadratureConfig& cfg = {});

/// beth(s) * pi^(s/2) / (2 Gamma(s/2+1) (s-1)), using 1/Gamma so that the
/// trivial zeros s = -2, -4, ... come out as exact zeros.
/// Throws DomainError("pole of the continuation") at s = 1.
Complex aleph_from_beth(const Complex& s, const QuadratureConfig& cfg = {});

/// |beth(s) - beth(1-s)|.
double functional_residual(const Complex& s, const QuadratureConfig& cfg = {});

/// Amplitudes of the real and imaginary parts of
/// z(z-1) cosh((z-1/2) ln(u)/2) at z = a + ib:
///   R = A cos(angle) + B sin(angle),  I = U cos(angle) + V sin(angle),
/// with angle = b ln(u)/2.
struct IntegrandDecomposition {
  double A = 0.0;
  double B = 0.0;
  double U = 0.0;
  double V = 0.0;
  double angle = 0.0;

  double real_part() const;
  double imag_part() const;

  // sqrt(A^2+B^2) sin(angle + (pi/2) sign(A) - atan(B/A)); needs A != 0.
  double real_part_phase_form() const;
  // Same shape with (U, V); needs U != 0.
  double imag_part_phase_form() const;
};

/// Throws DomainError("decomposition domain") for u < 1.
IntegrandDecomposition decompose(double a, double b, double u);

}  // namespace zeta
