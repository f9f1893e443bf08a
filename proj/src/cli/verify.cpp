#include "zeta/cli/verify.hpp"

#include "zeta/cli/config.hpp"
#include "zeta/theta.hpp"
#include "zeta/xi.hpp"
#include "zeta/zeros.hpp"
#include "zeta/zeta_em.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

namespace zeta::cli {

namespace {

// Evaluates `residual` and turns exceptions into a failed check. A zero
// threshold demands an exact zero.
CheckResult run_check(std::string name, double threshold, const std::function<double()>& residual) {
  CheckResult r;
  r.name = std::move(name);
  r.threshold = threshold;
  try {
    r.max_residual = residual();
    r.passed = threshold == 0.0 ? r.max_residual == 0.0 : r.max_residual < threshold;
  } catch (const std::exception& e) {
    r.max_residual = std::numeric_limits<double>::infinity();
    r.error = e.what();
    r.passed = false;
  }
  return r;
}

std::vector<Complex> strip_grid() {
  std::vector<Complex> grid;
  for (double sigma : {-1.0, 0.0, 0.25, 0.5, 2.0})
    for (double t : {0.0, 5.0, 10.0, 20.0}) grid.emplace_back(sigma, t);
  return grid;
}

std::vector<double> theta_grid() {
  std::vector<double> u = {0.05, 0.1, 0.5, 1.0, 2.0, 10.0, 20.0};
  for (int i = 0; i <= 200; ++i) u.push_back(std::min(20.0, 0.05 * std::pow(400.0, i / 200.0)));
  return u;
}

void theta_suite(std::vector<CheckResult>& out) {
  out.push_back(run_check("theta.psi_functional_equation", 1e-13, [] {
    double worst = 0.0;
    for (double u : theta_grid()) worst = std::max(worst, std::abs(psi_functional_residual(u)));
    return worst;
  }));
  out.push_back(run_check("theta.poisson_identity", 1e-12, [] {
    double worst = 0.0;
    for (double u : theta_grid()) {
      const double lhs = theta_full(u) * std::sqrt(u), rhs = theta_full(1.0 / u);
      worst = std::max(worst, std::abs(lhs - rhs) / rhs);
    }
    return worst;
  }));
}

void functional_suite(std::vector<CheckResult>& out, const QuadratureConfig& cfg) {
  out.push_back(run_check("functional.beth_symmetry", 1e-9, [&] {
    double worst = 0.0;
    for (const Complex& s : strip_grid()) worst = std::max(worst, functional_residual(s, cfg));
    return worst;
  }));
  out.push_back(run_check("functional.beth_at_0_and_1", 1e-10, [&] {
    return std::max(std::abs(beth(0.0, cfg).value - 1.0), std::abs(beth(1.0, cfg).value - 1.0));
  }));
}

void dual_suite(std::vector<CheckResult>& out, const QuadratureConfig& cfg) {
  out.push_back(run_check("dual.phi_aleph_vs_beth", 1e-8, [&] {
    double worst = 0.0;
    for (const Complex& s : strip_grid()) {
      if (s == Complex(1.0, 0.0)) continue;
      const Complex b = beth(s, cfg).value;
      const Complex product = phi_factor(s) * aleph_em(s).value;
      worst = std::max(worst, std::abs(product - b) / std::max(1.0, std::abs(b)));
    }
    return worst;
  }));
}

void trivial_suite(std::vector<CheckResult>& out, const QuadratureConfig& cfg) {
  out.push_back(run_check("trivial.aleph_em", 1e-8, [] {
    double worst = 0.0;
    for (double s : trivial_zeros(4)) worst = std::max(worst, std::abs(aleph_em(Complex(s, 0.0)).value));
    return worst;
  }));
  out.push_back(run_check("trivial.aleph_from_beth_exact", 0.0, [&] {
    double worst = 0.0;
    for (double s : trivial_zeros(4)) worst = std::max(worst, std::abs(aleph_from_beth(Complex(s, 0.0), cfg)));
    return worst;
  }));
}

void decomposition_suite(std::vector<CheckResult>& out, const QuadratureConfig& cfg) {
  out.push_back(run_check("decomposition.critical_imag_exact", 0.0, [] {
    std::mt19937_64 rng(20200826);
    std::uniform_real_distribution<double> b_dist(-50.0, 50.0), u_dist(1.0, 60.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i)
      worst = std::max(worst, std::abs(decompose(0.5, b_dist(rng), u_dist(rng)).imag_part()));
    return worst;
  }));
  out.push_back(run_check("decomposition.direct_product", 1e-12, [] {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> a_dist(0.0, 1.0), b_dist(-50.0, 50.0), u_dist(1.0, 60.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double a = a_dist(rng), b = b_dist(rng), u = u_dist(rng);
      const Complex z(a, b);
      const Complex direct = z * (z - 1.0) * std::cosh((z - 0.5) * std::log(u) / 2.0);
      const auto d = decompose(a, b, u);
      worst = std::max(worst, std::abs(Complex(d.real_part(), d.imag_part()) - direct) / std::abs(direct));
    }
    return worst;
  }));
  out.push_back(run_check("decomposition.critical_beth_imag", 1e-10, [&] {
    double worst = 0.0;
    for (double b : {0.0, 5.0, 14.0, 21.0, 30.0})
      worst = std::max(worst, std::abs(beth(Complex(0.5, b), cfg).value.imag()));
    return worst;
  }));
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"theta", "functional", "dual", "trivial", "decomposition", "all"};
  return names;
}

std::vector<CheckResult> run_suite(std::string_view suite, const QuadratureConfig& cfg) {
  const bool all = suite == "all";
  if (!all && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw UsageError("unknown verify suite '" + std::string(suite) + "'");
  std::vector<CheckResult> out;
  if (all || suite == "theta") theta_suite(out);
  if (all || suite == "functional") functional_suite(out, cfg);
  if (all || suite == "dual") dual_suite(out, cfg);
  if (all || suite == "trivial") trivial_suite(out, cfg);
  if (all || suite == "decomposition") decomposition_suite(out, cfg);
  return out;
}

}  // namespace zeta::cli
