// Shared numerical foundation: complex values, error types and Romberg
// quadrature over finite and [1, inf) ranges.

#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

namespace zeta {

using Complex = std::complex<double>;

/// Raised when an argument lies outside an operation's domain
/// (poles, non-positive theta arguments, diverging series, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Raised when a numerical procedure cannot deliver a usable result
/// (non-finite integrand values, truncation error above tolerance).
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Throws DomainError naming `what` unless both parts of z are finite.
void require_finite(const Complex& z, const char* what);
void require_finite(double x, const char* what);

struct QuadratureConfig {
  int order = 5;         // Romberg extrapolation columns
  int max_iters = 20;    // refinement levels, at most 2^max_iters panels
  double cutoff = 60.0;  // upper limit replacing infinity
  double tol = 1e-14;    // absolute error target

  /// Throws DomainError if any field violates its bounds.
  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double err_est = 0.0;
  int levels = 0;          // refinement levels actually used
  bool converged = false;  // err_est < tol
};

using RealFunction = std::function<double(double)>;

/// Romberg integration of f over [a, b].
///
/// The tableau is truncated at cfg.order columns, so the result is exact for
/// polynomials of degree <= 2*order - 1. err_est is the magnitude of the last
/// extrapolation correction. Refinement stops once err_est < cfg.tol at two
/// consecutive levels (after the tableau is full) or after cfg.max_iters
/// levels; in the latter case the result is returned with converged = false.
QuadratureResult romberg(const RealFunction& f, double a, double b,
                         const QuadratureConfig& cfg);

/// Envelope |f(u)| <= scale * u^power * exp(-pi*u) for u >= cutoff.
struct DecayBound {
  double scale = 1.0;
  double power = 0.0;

  /// Bound on the integral of the envelope over [cutoff, inf).
  double tail(double cutoff) const;
};

/// Integral of f over [1, inf), computed as romberg(f, 1, cfg.cutoff).
/// Throws NumericalError("cutoff too small") when the neglected tail bound
/// exceeds cfg.tol.
QuadratureResult improper_integral(const RealFunction& f,
                                   const QuadratureConfig& cfg,
                                   const DecayBound& decay = {});

}  // namespace zeta
