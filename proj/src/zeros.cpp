#include "zeta/zeros.hpp"

#include "zeta/theta.hpp"
#include "zeta/xi.hpp"
#include "zeta/zeta_em.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

namespace zeta {

namespace {

bool negative(double x) { return std::signbit(x); }

// Runs task(i) for i in [0, count) on up to `threads` threads. The first
// exception thrown by any task is rethrown on the caller's thread.
template <class Task>
void parallel_for(std::size_t count, int threads, Task task) {
  const std::size_t workers =
      std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, threads)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < count; i += workers) task(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

struct Bracket {
  double lo, hi, g_lo;
  double slope;  // |secant slope| of g over the grid cell
};

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Below this, g has lost its sign to rounding (g = 2(1/4+b^2)J - 1 with the
// two terms nearly equal).
constexpr double kFlatFloor = 64.0 * kEps;

// Rounding noise of g across a bracket: largest difference between two
// evaluations on disjoint sample points (longer cutoff, one more
// extrapolation column).
double g_noise(const std::pair<double, double>& bracket, const QuadratureConfig& cfg) {
  QuadratureConfig other = cfg;
  other.cutoff = cfg.cutoff * 1.1;
  other.order = cfg.order + 1;
  double noise = kEps;
  const double mid = bracket.first + 0.5 * (bracket.second - bracket.first);
  for (double b : {bracket.first, mid, bracket.second})
    noise = std::max(noise, std::abs(critical_g(b, cfg) - critical_g(b, other)));
  return noise;
}

std::string format_value(const char* spec, double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

Bracket bisect(Bracket br, double tol, const QuadratureConfig& cfg) {
  while (br.hi - br.lo >= tol) {
    const double mid = br.lo + 0.5 * (br.hi - br.lo);
    if (mid <= br.lo || mid >= br.hi) break;  // interval is down to adjacent doubles
    const double g_mid = critical_g(mid, cfg);
    if (g_mid == 0.0) return {mid, mid, 0.0, br.slope};
    if (negative(g_mid) == negative(br.g_lo)) {
      br.lo = mid;
      br.g_lo = g_mid;
    } else {
      br.hi = mid;
    }
  }
  return br;
}

}  // namespace

void ScanConfig::validate() const {
  if (!std::isfinite(b_min) || !std::isfinite(b_max) || !(b_min >= 0.0) || !(b_min < b_max))
    throw DomainError("scan range must satisfy 0 <= b_min < b_max");
  if (b_max > kMaxCriticalHeight) throw DomainError("scan range exceeds b = 200");
  if (!(step > 0.0) || step > 0.5) throw DomainError("scan step must lie in (0, 0.5]");
  if (!(refine_tol > 0.0)) throw DomainError("refine tolerance must be > 0");
  if (threads < 1) throw DomainError("thread count must be >= 1");
}

double critical_g(double b, const QuadratureConfig& cfg) {
  require_finite(b, "b");
  if (std::abs(b) > kMaxCriticalHeight) throw DomainError("critical_g needs |b| <= 200");
  const double twist = 0.5 * b;
  const auto integral = improper_integral(
      [&](double u) { return std::pow(u, -0.75) * psi(u).value * std::cos(twist * std::log(u)); },
      cfg, DecayBound{1.0001, -0.75});
  return 2.0 * (0.25 + b * b) * integral.value - 1.0;
}

ZeroResiduals verify_zero(double b, const QuadratureConfig& cfg) {
  require_finite(b, "b");
  if (std::abs(b) > kMaxCriticalHeight) throw DomainError("verify_zero needs |b| <= 200");
  const Complex s(0.5, b);
  return {std::abs(beth(s, cfg).value), std::abs(aleph_em(s).value)};
}

std::vector<Zero> scan_zeros(const ScanConfig& scan, const QuadratureConfig& cfg) {
  scan.validate();
  cfg.validate();

  std::vector<double> grid;
  const auto count = static_cast<long long>(std::floor((scan.b_max - scan.b_min) / scan.step + 1e-9));
  for (long long i = 0; i <= count; ++i) grid.push_back(scan.b_min + static_cast<double>(i) * scan.step);
  if (grid.back() < scan.b_max) grid.push_back(scan.b_max);

  std::vector<double> values(grid.size());
  parallel_for(grid.size(), scan.threads, [&](std::size_t i) { values[i] = critical_g(grid[i], cfg); });

  for (std::size_t i = 0; i + 1 < grid.size(); ++i)
    if (std::abs(values[i]) < kFlatFloor && std::abs(values[i + 1]) < kFlatFloor)
      throw NumericalError("critical-line values below the rounding floor from b = " + format_value("%.4f", grid[i]));

  auto secant = [&](std::size_t i, std::size_t j) { return std::abs(values[j] - values[i]) / (grid[j] - grid[i]); };
  std::vector<Bracket> brackets;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (values[i] == 0.0) {
      const std::size_t lo = i > 0 ? i - 1 : i, hi = i + 1 < grid.size() ? i + 1 : i;
      brackets.push_back({grid[i], grid[i], 0.0, lo < hi ? secant(lo, hi) : 0.0});
      continue;
    }
    if (i + 1 < grid.size() && values[i + 1] != 0.0 && negative(values[i]) != negative(values[i + 1]))
      brackets.push_back({grid[i], grid[i + 1], values[i], secant(i, i + 1)});
  }

  std::vector<Zero> zeros(brackets.size());
  parallel_for(brackets.size(), scan.threads, [&](std::size_t k) {
    const Bracket br = bisect(brackets[k], scan.refine_tol, cfg);
    Zero& z = zeros[k];
    z.b = br.lo + 0.5 * (br.hi - br.lo);
    z.bracket = {br.lo, br.hi};
    // Rounding in g moves the root by about noise / |g'|.
    const double uncertainty = g_noise(z.bracket, cfg) / br.slope;
    if (!(uncertainty <= scan.refine_tol))
      throw NumericalError("zero near b = " + format_value("%.4f", z.b) + " not resolvable to the refine tolerance (rounding moves it by ~" +
                           format_value("%.1e", uncertainty) + ")");
    const auto residuals = verify_zero(z.b, cfg);
    z.residual_beth = residuals.residual_beth;
    z.residual_aleph = residuals.residual_aleph;
  });
  return zeros;
}

std::vector<double> trivial_zeros(int k_max) {
  if (k_max < 0) throw DomainError("k_max must be >= 0");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k) out.push_back(-2.0 * (k + 1));
  return out;
}

TrivialZeroCheck check_trivial_zero(double s, const QuadratureConfig& cfg) {
  TrivialZeroCheck check;
  check.s = s;
  check.aleph_em_abs = std::abs(aleph_em(Complex(s, 0.0)).value);
  check.beth_path = aleph_from_beth(Complex(s, 0.0), cfg);
  check.ok = check.aleph_em_abs < 1e-8 && check.beth_path == Complex(0.0, 0.0);
  return check;
}

Complex weierstrass_factor(const Complex& z, const Complex& zk) {
  require_finite(z, "z");
  require_finite(zk, "zk");
  const double modulus2 = std::norm(zk);
  if (modulus2 == 0.0) throw DomainError("zero modulus");
  const Complex shifted = z - 0.5;
  const Complex product = 0.25 - shifted * shifted;  // z(1-z)
  return 1.0 - product / modulus2;
}

Complex truncated_product(const Complex& z, const std::vector<Zero>& zeros, int K) {
  if (K < 0 || static_cast<std::size_t>(K) > zeros.size())
    throw DomainError("truncated_product needs 0 <= K <= number of zeros");
  Complex product = 1.0;
  for (int k = 0; k < K; ++k) product *= weierstrass_factor(z, Complex(0.5, zeros[k].b));
  return product;
}

double perturbation_residual(const Complex& zk, double eps, double delta) {
  require_finite(zk, "zk");
  require_finite(delta, "delta");
  if (zk.real() != 0.5) throw DomainError("base zero must be critical");
  if (!(eps >= 0.0 && eps < 0.5)) throw DomainError("perturbation needs 0 <= eps < 1/2");
  const Complex y = zk + eps * std::polar(1.0, delta);
  const Complex y_partner = std::conj(zk) + eps * std::polar(1.0, -delta);
  return std::abs(y + y_partner - 1.0);
}

}  // namespace zeta
