// Zeros of the completed zeta function: critical-line scanning, trivial
// zeros, and the symmetric product-factor experiments.

#pragma once

#include "zeta/numerics.hpp"

#include <utility>
#include <vector>

namespace zeta {

/// A zero 1/2 + ib located on the critical line.
struct Zero {
  double a = 0.5;
  double b = 0.0;
  double residual_beth = 0.0;   // |beth(1/2 + ib)|
  double residual_aleph = 0.0;  // |zeta_EM(1/2 + ib)|
  std::pair<double, double> bracket;
};

struct ScanConfig {
  double b_min = 10.0;
  double b_max = 35.0;
  double step = 0.25;
  double refine_tol = 1e-7;
  int threads = 1;

  void validate() const;
};

/// Largest |b| for which the default quadrature resolves the oscillating
/// kernel.
inline constexpr double kMaxCriticalHeight = 200.0;

/// g(b) = 2 (1/4 + b^2) int_1^inf u^(-3/4) psi(u) cos(b ln(u)/2) du - 1,
/// which equals -beth(1/2 + ib). Roots of g are the critical-line zeros.
double critical_g(double b, const QuadratureConfig& cfg = {});

struct ZeroResiduals {
  double residual_beth = 0.0;
  double residual_aleph = 0.0;
};

ZeroResiduals verify_zero(double b, const QuadratureConfig& cfg = {});

/// Evaluates g on b_min, b_min + step, ... (plus b_max), bisects every sign
/// change down to refine_tol and returns the zeros in increasing order.
/// Grid evaluation and refinement may run on scan.threads threads; the result
/// does not depend on the thread count.
/// |beth(1/2 + ib)| decays like exp(-pi b/4), so in binary64 the sign of g is
/// lost somewhere above b ~ 45. Throws NumericalError when two consecutive
/// grid values fall below the rounding floor, or when rounding noise in g
/// moves a refined zero by more than refine_tol.
std::vector<Zero> scan_zeros(const ScanConfig& scan, const QuadratureConfig& cfg = {});

/// -2, -4, ..., -2(k_max+1).
std::vector<double> trivial_zeros(int k_max);

struct TrivialZeroCheck {
  double s = 0.0;
  double aleph_em_abs = 0.0;  // |zeta_EM(s)|
  Complex beth_path;          // aleph_from_beth(s), exactly 0 at a trivial zero
  bool ok = false;            // |zeta_EM(s)| < 1e-8 and beth_path == 0
};

TrivialZeroCheck check_trivial_zero(double s, const QuadratureConfig& cfg = {});

/// 1 - z(1-z)/|zk|^2, the product of the factors for zk and conj(zk) when
/// Re zk = 1/2. Throws DomainError("zero modulus") for zk = 0.
Complex weierstrass_factor(const Complex& z, const Complex& zk);

/// Product of the first K factors over 1/2 + i b_k.
Complex truncated_product(const Complex& z, const std::vector<Zero>& zeros, int K);

/// |y + conj-partner - 1| for y = zk + eps e^{i delta} and
/// conj(zk) + eps e^{-i delta}; analytically 2 eps |cos delta|.
/// Throws DomainError("base zero must be critical") unless Re zk = 1/2.
double perturbation_residual(const Complex& zk, double eps, double delta);

}  // namespace zeta
