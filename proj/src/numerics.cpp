#include "zeta/numerics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace zeta {

void require_finite(const Complex& z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError(std::string(what) + " must be finite");
}

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw DomainError(std::string(what) + " must be finite");
}

void QuadratureConfig::validate() const {
  if (order < 2) throw DomainError("quadrature order must be >= 2");
  if (max_iters < 1 || max_iters > 30)
    throw DomainError("quadrature max_iters must lie in [1, 30]");
  if (!(cutoff > 1.0) || !std::isfinite(cutoff))
    throw DomainError("quadrature cutoff must be a finite value > 1");
  if (!(tol > 0.0) || !std::isfinite(tol))
    throw DomainError("quadrature tol must be a finite value > 0");
}

namespace {

double checked(const RealFunction& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) throw NumericalError("non-finite integrand");
  return y;
}

}  // namespace

QuadratureResult romberg(const RealFunction& f, double a, double b,
                         const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(a < b)) throw DomainError("romberg requires a < b");

  const int columns = cfg.order;
  // prev/curr hold one tableau row each, truncated to `columns` entries.
  std::vector<double> prev(columns, 0.0), curr(columns, 0.0);

  const double width = b - a;
  double trapezoid = 0.5 * width * (checked(f, a) + checked(f, b));
  prev[0] = trapezoid;

  QuadratureResult result;
  result.value = trapezoid;
  result.err_est = std::numeric_limits<double>::infinity();

  int quiet_levels = 0;
  long long panels = 1;
  for (int level = 1; level <= cfg.max_iters; ++level) {
    const double h = width / static_cast<double>(2 * panels);
    // Neumaier-compensated sum of the new midpoints.
    double midpoints = 0.0, compensation = 0.0;
    for (long long i = 0; i < panels; ++i) {
      const double y = checked(f, a + static_cast<double>(2 * i + 1) * h);
      const double t = midpoints + y;
      compensation += std::abs(midpoints) >= std::abs(y) ? (midpoints - t) + y : (y - t) + midpoints;
      midpoints = t;
    }
    midpoints += compensation;
    trapezoid = 0.5 * trapezoid + h * midpoints;
    panels *= 2;

    curr[0] = trapezoid;
    const int depth = std::min(level, columns - 1);
    double factor = 1.0;
    double correction = 0.0;
    for (int j = 1; j <= depth; ++j) {
      factor *= 4.0;
      correction = (curr[j - 1] - prev[j - 1]) / (factor - 1.0);
      curr[j] = curr[j - 1] + correction;
    }

    result.value = curr[depth];
    result.err_est = std::abs(correction);
    result.levels = level;
    std::swap(prev, curr);

    if (level >= columns - 1 && result.err_est < cfg.tol) {
      if (++quiet_levels >= 2) break;
    } else {
      quiet_levels = 0;
    }
  }
  result.converged = result.err_est < cfg.tol;
  return result;
}

double DecayBound::tail(double cutoff) const {
  constexpr double pi = std::numbers::pi;
  const double rate = power > 0.0 ? pi - power / cutoff : pi;
  if (rate <= 0.0) return std::numeric_limits<double>::infinity();
  return scale * std::pow(cutoff, power) * std::exp(-pi * cutoff) / rate;
}

QuadratureResult improper_integral(const RealFunction& f,
                                   const QuadratureConfig& cfg,
                                   const DecayBound& decay) {
  cfg.validate();
  if (decay.tail(cfg.cutoff) >= cfg.tol) throw NumericalError("cutoff too small");
  return romberg(f, 1.0, cfg.cutoff, cfg);
}

}  // namespace zeta
