#include "zeta/xi.hpp"

#include "zeta/gamma.hpp"
#include "zeta/theta.hpp"

#include <cmath>
#include <numbers>

namespace zeta {

namespace {

constexpr double pi = std::numbers::pi;

// psi(u) <= exp(-pi u) / (1 - exp(-3 pi)) for u >= 1.
constexpr double kPsiEnvelope = 1.0001;

double phase_form(double p, double q, double angle) {
  if (p == 0.0) throw DomainError("phase form needs a non-zero leading amplitude");
  const double sign = p > 0.0 ? 1.0 : -1.0;
  return std::hypot(p, q) * std::sin(angle + 0.5 * pi * sign - std::atan(q / p));
}

}  // namespace

Complex phi_factor(const Complex& s) {
  require_finite(s, "s");
  const Complex half = 0.5 * s + 1.0;
  if (is_nonpositive_integer(half)) throw DomainError("phi pole (trivial-zero abscissa)");
  return 2.0 * std::exp(-0.5 * s * std::log(pi)) * complex_gamma(half) * (s - 1.0);
}

BethResult beth(const Complex& s, const QuadratureConfig& cfg) {
  require_finite(s, "s");
  cfg.validate();
  const double stretch = 0.5 * (s.real() - 0.5);  // cosh argument per ln(u)
  const double twist = 0.5 * s.imag();

  const DecayBound decay{kPsiEnvelope, 0.5 * std::abs(s.real() - 0.5) - 0.75};

  const auto even = improper_integral(
      [&](double u) {
        const double lu = std::log(u);
        return std::pow(u, -0.75) * psi(u).value * std::cosh(stretch * lu) * std::cos(twist * lu);
      },
      cfg, decay);
  const auto odd = improper_integral(
      [&](double u) {
        const double lu = std::log(u);
        return std::pow(u, -0.75) * psi(u).value * std::sinh(stretch * lu) * std::sin(twist * lu);
      },
      cfg, decay);

  const Complex weight = s * (s - 1.0);
  BethResult out;
  out.value = 1.0 + 2.0 * weight * Complex(even.value, odd.value);
  out.err_est = 2.0 * std::abs(weight) * (even.err_est + odd.err_est);
  out.converged = even.converged && odd.converged;
  return out;
}

Complex aleph_from_beth(const Complex& s, const QuadratureConfig& cfg) {
  require_finite(s, "s");
  if (s == Complex(1.0, 0.0)) throw DomainError("pole of the continuation");
  const Complex inv_gamma = reciprocal_gamma(0.5 * s + 1.0);
  if (inv_gamma == Complex(0.0, 0.0)) return 0.0;
  return beth(s, cfg).value * std::exp(0.5 * s * std::log(pi)) * inv_gamma / (2.0 * (s - 1.0));
}

double functional_residual(const Complex& s, const QuadratureConfig& cfg) {
  return std::abs(beth(s, cfg).value - beth(1.0 - s, cfg).value);
}

double IntegrandDecomposition::real_part() const {
  return A * std::cos(angle) + B * std::sin(angle);
}

double IntegrandDecomposition::imag_part() const {
  return U * std::cos(angle) + V * std::sin(angle);
}

double IntegrandDecomposition::real_part_phase_form() const { return phase_form(A, B, angle); }

double IntegrandDecomposition::imag_part_phase_form() const { return phase_form(U, V, angle); }

IntegrandDecomposition decompose(double a, double b, double u) {
  require_finite(a, "a");
  require_finite(b, "b");
  if (!(u >= 1.0) || !std::isfinite(u)) throw DomainError("decomposition domain");
  const double lu = std::log(u);
  const double x = (a - 0.5) * lu / 2.0;
  const double ch = std::cosh(x), sh = std::sinh(x);
  const double quadratic = a * (a - 1.0) - b * b;
  const double cross = b * (2.0 * a - 1.0);

  IntegrandDecomposition d;
  d.A = quadratic * ch;
  d.B = -cross * sh;
  d.U = cross * ch;
  d.V = quadratic * sh;
  d.angle = b * lu / 2.0;
  return d;
}

}  // namespace zeta
