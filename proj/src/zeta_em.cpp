#include "zeta/zeta_em.hpp"

#include "zeta/bernoulli.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace zeta {

namespace {

constexpr int kMaxCorrections = BernoulliTable::kDefaultMaxIndex / 2 - 1;

// b_2j / (2j)!, correctly rounded, for j = 0..kMaxCorrections+1.
const std::array<double, kMaxCorrections + 2>& correction_coefficients() {
  static const auto table = [] {
    std::array<double, kMaxCorrections + 2> out{};
    const auto& bern = BernoulliTable::standard();
    boost::multiprecision::cpp_int factorial = 1;
    for (int j = 0; j < static_cast<int>(out.size()); ++j) {
      if (j > 0) factorial *= (2 * j - 1) * (2 * j);
      out[j] = to_double(bern.number(2 * j) / Rational(factorial));
    }
    return out;
  }();
  return table;
}

// n^-s for a positive integer n.
Complex int_pow_neg(double n, const Complex& s) { return std::exp(-s * std::log(n)); }

void require_not_pole(const Complex& s) {
  if (s == Complex(1.0, 0.0)) throw DomainError("pole of the continuation");
}

}  // namespace

void EmParams::validate() const {
  if (N < 2) throw DomainError("Euler-Maclaurin N must be >= 2");
  if (M < 1 || M > kMaxCorrections)
    throw DomainError("Euler-Maclaurin M must lie in [1, 31]");
}

Complex zeta_dirichlet(const Complex& s, std::int64_t terms) {
  require_finite(s, "s");
  if (!(s.real() > 1.0)) throw DomainError("Dirichlet series diverges for Re(s) <= 1");
  if (terms < 1) throw DomainError("Dirichlet series needs at least one term");
  Complex sum = 0.0;
  // Smallest terms first.
  for (std::int64_t n = terms; n >= 1; --n) sum += int_pow_neg(static_cast<double>(n), s);
  return sum;
}

EmParams auto_em_params(const Complex& s) {
  EmParams p;
  p.M = 12;
  const int spec_n = std::max(20, static_cast<int>(std::ceil(2.0 * std::abs(s.imag()))));
  if (s.real() >= 0.0) {
    p.N = spec_n;
    return p;
  }

  // |b_2(M+1)/(2(M+1))!| * |s(s+1)...(s+2M)|; zero at the trivial zeros.
  const auto& c = correction_coefficients();
  double pochhammer = 1.0;
  for (int k = 0; k <= 2 * p.M; ++k) pochhammer *= std::abs(s + static_cast<double>(k));
  const double omitted_scale = 2.0 * std::abs(c[p.M + 1]) * pochhammer;

  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double sigma = s.real();
  double partial = 0.0;  // sum_{n<=N} n^-sigma
  double best = std::numeric_limits<double>::infinity();
  for (int n = 1; n <= spec_n; ++n) {
    partial += std::pow(static_cast<double>(n), -sigma);
    if (n < 2) continue;
    const double truncation =
        omitted_scale * std::pow(static_cast<double>(n), -sigma - 2.0 * p.M - 1.0);
    const double rounding = 4.0 * eps * partial;
    if (truncation + rounding < best) {
      best = truncation + rounding;
      p.N = n;
    }
  }
  return p;
}

EmResult aleph_em(const Complex& s) {
  require_finite(s, "s");
  return aleph_em(s, auto_em_params(s));
}

EmResult aleph_em(const Complex& s, const EmParams& params) {
  require_finite(s, "s");
  require_not_pole(s);
  params.validate();
  const auto& c = correction_coefficients();
  const int N = params.N;
  const double n_real = static_cast<double>(N);

  Complex sum = 0.0;
  for (int n = N - 1; n >= 1; --n) sum += int_pow_neg(static_cast<double>(n), s);

  const Complex n_pow = int_pow_neg(n_real, s);  // N^-s
  sum += n_real * n_pow / (s - 1.0) + 0.5 * n_pow;

  Complex pochhammer = s;            // s(s+1)...(s+2j-2)
  Complex power = n_pow / n_real;    // N^(-s-2j+1)
  const double inv_n2 = 1.0 / (n_real * n_real);
  for (int j = 1; j <= params.M; ++j) {
    sum += c[j] * pochhammer * power;
    pochhammer *= (s + (2.0 * j - 1.0)) * (s + 2.0 * j);
    power *= inv_n2;
  }
  const Complex omitted = c[params.M + 1] * pochhammer * power;

  EmResult out;
  out.value = sum;
  out.err_est = 2.0 * std::abs(omitted);
  out.converged = out.err_est <= kEmTolerance;
  out.params = params;
  return out;
}

Complex em_limit_head(const Complex& s, int M) {
  require_finite(s, "s");
  require_not_pole(s);
  if (M < 1 || M > kMaxCorrections) throw DomainError("Euler-Maclaurin M must lie in [1, 31]");
  const auto& c = correction_coefficients();
  Complex sum = 1.0 / (s - 1.0) + 0.5;
  Complex pochhammer = s;
  for (int j = 1; j <= M; ++j) {
    sum += c[j] * pochhammer;
    pochhammer *= (s + (2.0 * j - 1.0)) * (s + 2.0 * j);
  }
  return sum;
}

Complex sigma_M_direct(const Complex& s, int M) {
  require_finite(s, "s");
  if (M < 1 || M > 8 || !(s.real() > 1.0 - 2.0 * M)) throw DomainError("sigma_M domain");

  const auto& bern = BernoulliTable::standard();
  const int order = 2 * M + 1;

  // s(s+1)...(s+2M) / (2M+1)!
  Complex prefactor = 1.0;
  for (int k = 0; k <= 2 * M; ++k) prefactor *= (s + static_cast<double>(k)) / (k + 1.0);

  double max_b = 0.0;
  for (int i = 0; i <= 4096; ++i)
    max_b = std::max(max_b, std::abs(bern.polynomial(order, i / 4096.0)));
  max_b *= 1.01;

  const Complex exponent = -s - static_cast<double>(2 * M + 1);
  const double decay = s.real() + 2.0 * M;  // tail ~ x^-decay / decay
  const double tail_target = 1e-12 / std::max(1.0, std::abs(prefactor));

  QuadratureConfig cfg;
  cfg.order = 6;
  cfg.max_iters = 16;

  Complex integral = 0.0;
  constexpr int kMaxIntervals = 2'000'000;
  int n = 1;
  for (; n <= kMaxIntervals; ++n) {
    const double lo = n;
    cfg.tol = 1e-13 * max_b * std::pow(lo, -decay - 1.0);
    auto kernel = [&](double x) { return bern.polynomial(order, x - lo) * std::exp(exponent * std::log(x)); };
    const double re = romberg([&](double x) { return kernel(x).real(); }, lo, lo + 1.0, cfg).value;
    const double im = romberg([&](double x) { return kernel(x).imag(); }, lo, lo + 1.0, cfg).value;
    integral += Complex(re, im);
    const double next = lo + 1.0;
    if (max_b * std::pow(next, -decay) / decay < tail_target) break;
  }
  if (n > kMaxIntervals) throw NumericalError("sigma_M integral did not reach its tail bound");
  return -prefactor * integral;
}

}  // namespace zeta
