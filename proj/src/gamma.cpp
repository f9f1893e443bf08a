#include "zeta/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace zeta {

namespace {

constexpr double pi = std::numbers::pi;

// sin(pi*x) with the argument reduced to [-1/2, 1/2] before scaling by pi.
double sinpi_real(double x) {
  double r = std::fmod(x, 2.0);
  if (r < -1.0) r += 2.0;
  else if (r > 1.0) r -= 2.0;
  if (r > 0.5) r = 1.0 - r;
  else if (r < -0.5) r = -1.0 - r;
  return std::sin(pi * r);
}

double cospi_real(double x) {
  double r = std::fmod(std::abs(x), 2.0);
  if (r > 1.0) r = 2.0 - r;
  if (r < 0.25) return std::cos(pi * r);
  return sinpi_real(0.5 - r);
}

// Lanczos coefficients, g = 607/128, 14 terms.
constexpr std::array<double, 14> kLanczos = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};

// log Gamma(z) for Re z >= 1/2.
Complex lanczos_log_gamma(const Complex& z) {
  const Complex t = z + 5.24218750000000000;
  Complex series = 0.999999999999997092;
  for (std::size_t j = 0; j < kLanczos.size(); ++j)
    series += kLanczos[j] / (z + static_cast<double>(j + 1));
  return (z + 0.5) * std::log(t) - t + std::log(2.5066282746310005 * series / z);
}

void require_not_pole(const Complex& s) {
  if (is_nonpositive_integer(s))
    throw DomainError("gamma pole at non-positive integer");
}

}  // namespace

Complex sin_pi(const Complex& z) {
  const double x = z.real(), y = z.imag();
  return {sinpi_real(x) * std::cosh(pi * y), cospi_real(x) * std::sinh(pi * y)};
}

bool is_nonpositive_integer(const Complex& z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

Complex complex_gamma(const Complex& s) {
  require_finite(s, "gamma argument");
  require_not_pole(s);
  if (s.real() < 0.5) return pi / (sin_pi(s) * complex_gamma(1.0 - s));
  return std::exp(lanczos_log_gamma(s));
}

Complex log_gamma(const Complex& s) {
  require_finite(s, "gamma argument");
  require_not_pole(s);
  if (s.real() < 0.5)
    return std::log(pi) - std::log(sin_pi(s)) - lanczos_log_gamma(1.0 - s);
  return lanczos_log_gamma(s);
}

Complex reciprocal_gamma(const Complex& s) {
  require_finite(s, "gamma argument");
  if (is_nonpositive_integer(s)) return 0.0;
  if (s.real() < 0.5) return complex_gamma(1.0 - s) * sin_pi(s) / pi;
  return std::exp(-lanczos_log_gamma(s));
}

}  // namespace zeta
