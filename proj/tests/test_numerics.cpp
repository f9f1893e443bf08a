#include "zeta/numerics.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

using namespace zeta;

namespace {

constexpr double pi = std::numbers::pi;

// Test-side theta sum, independent of the library's truncation rule.
double psi_oracle(double u) {
  double sum = 0.0;
  for (int n = 1; n <= 12; ++n) sum += std::exp(-pi * u * n * n);
  return sum;
}

double trapezoid_oracle(const RealFunction& f, double a, double b, long long points) {
  const double h = (b - a) / static_cast<double>(points - 1);
  double sum = 0.5 * (f(a) + f(b));
  for (long long i = 1; i < points - 1; ++i) sum += f(a + static_cast<double>(i) * h);
  return sum * h;
}

}  // namespace

TEST_CASE("romberg integrates simple closed forms") {
  const QuadratureConfig cfg;
  CHECK(romberg([](double x) { return x * x; }, 0.0, 1.0, cfg).value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(std::abs(romberg([](double x) { return x * x; }, 0.0, 1.0, cfg).value - 1.0 / 3.0) < 1e-12);
  const auto s = romberg([](double x) { return std::sin(x); }, 0.0, pi, cfg);
  CHECK(std::abs(s.value - 2.0) < 1e-10);
  CHECK(s.converged);
}

TEST_CASE("romberg agrees with a dense trapezoid oracle on the theta kernel") {
  auto f = [](double u) { return std::pow(u, -0.75) * psi_oracle(u); };
  const double oracle = trapezoid_oracle(f, 1.0, 60.0, 1'000'000);
  const auto r = romberg(f, 1.0, 60.0, QuadratureConfig{});
  CHECK(r.converged);
  CHECK(std::abs(r.value - oracle) < 1e-9);
}

TEST_CASE("romberg is exact on polynomials of degree 2*order-1") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  for (int order = 2; order <= 6; ++order) {
    const int degree = 2 * order - 1;
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<double> c(degree + 1);
      for (auto& v : c) v = coef(rng);
      auto poly = [&](double x) {
        double acc = 0.0;
        for (int k = degree; k >= 0; --k) acc = acc * x + c[k];
        return acc;
      };
      const double a = -0.5, b = 1.5;
      double exact = 0.0;
      for (int k = 0; k <= degree; ++k) exact += c[k] * (std::pow(b, k + 1) - std::pow(a, k + 1)) / (k + 1);
      QuadratureConfig cfg;
      cfg.order = order;
      CHECK(std::abs(romberg(poly, a, b, cfg).value - exact) < 1e-12);
    }
  }
}

TEST_CASE("romberg error paths") {
  const QuadratureConfig cfg;
  CHECK_THROWS_WITH_AS(romberg([](double) { return std::nan(""); }, 0.0, 1.0, cfg), "non-finite integrand",
                       NumericalError);
  CHECK_THROWS_AS(romberg([](double x) { return x; }, 1.0, 1.0, cfg), DomainError);

  QuadratureConfig shallow;
  shallow.max_iters = 3;
  shallow.tol = 1e-15;
  const auto r = romberg([](double x) { return std::sqrt(x); }, 0.0, 1.0, shallow);
  CHECK_FALSE(r.converged);
  CHECK(r.err_est > shallow.tol);
  CHECK(r.levels == 3);
}

TEST_CASE("quadrature config bounds") {
  QuadratureConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.max_iters = 31;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  cfg = {};
  cfg.order = 1;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  cfg = {};
  cfg.cutoff = 1.0;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  cfg = {};
  cfg.tol = 0.0;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
}

TEST_CASE("improper integral of exp(-pi u)") {
  const auto r = improper_integral([](double u) { return std::exp(-pi * u); }, QuadratureConfig{});
  CHECK(std::abs(r.value - std::exp(-pi) / pi) < 1e-10);
  CHECK(improper_integral([](double) { return 0.0; }, QuadratureConfig{}).value == 0.0);
}

TEST_CASE("improper integral of the theta kernel matches the completed-zeta relation") {
  // beth(1/2) = 1 - J/2 with beth(1/2) = Phi(1/2) zeta(1/2) and
  // Phi(1/2) = -pi^(-1/4) Gamma(1/4)/4.
  constexpr double gamma_quarter = 3.6256099082219083119;
  constexpr double zeta_half = -1.4603545088095868129;
  const double phi_half = -std::pow(pi, -0.25) * gamma_quarter / 4.0;
  const double expected = 2.0 * (1.0 - phi_half * zeta_half);

  const auto r = improper_integral([](double u) { return std::pow(u, -0.75) * psi_oracle(u); },
                                   QuadratureConfig{}, DecayBound{1.0001, -0.75});
  CHECK(std::abs(r.value - expected) < 1e-12);
  CHECK(r.value == doctest::Approx(0.0115168872467).epsilon(1e-10));
}

TEST_CASE("improper integral is stable under a larger cutoff") {
  auto f = [](double u) { return std::pow(u, -0.75) * psi_oracle(u); };
  const DecayBound decay{1.0001, -0.75};
  QuadratureConfig cfg;
  cfg.cutoff = 20.0;
  const double at20 = improper_integral(f, cfg, decay).value;
  cfg.cutoff = 40.0;
  const double at40 = improper_integral(f, cfg, decay).value;
  cfg.cutoff = 60.0;
  const double at60 = improper_integral(f, cfg, decay).value;
  CHECK(std::abs(at40 - at20) < decay.tail(20.0) + 2 * cfg.tol);
  CHECK(std::abs(at60 - at40) < decay.tail(40.0) + 2 * cfg.tol);
}

TEST_CASE("improper integral rejects a cutoff whose tail exceeds tol") {
  QuadratureConfig cfg;
  cfg.cutoff = 2.0;
  CHECK_THROWS_WITH_AS(improper_integral([](double u) { return std::exp(-pi * u); }, cfg), "cutoff too small",
                       NumericalError);
  CHECK(DecayBound{1.0, 0.0}.tail(60.0) < 1e-80);
  CHECK(std::isinf(DecayBound{1.0, 100.0}.tail(10.0)));
}

TEST_CASE("require_finite") {
  CHECK_THROWS_AS(require_finite(Complex(std::nan(""), 0.0), "s"), DomainError);
  CHECK_THROWS_AS(require_finite(std::numeric_limits<double>::infinity(), "x"), DomainError);
  CHECK_NOTHROW(require_finite(Complex(1.0, -2.0), "s"));
}
