// Analytic continuation of the zeta function by Euler-Maclaurin summation,
// plus the plain Dirichlet series for Re s > 1.

#pragma once

#include "zeta/numerics.hpp"

#include <cstdint>

namespace zeta {

/// Truncation indices of the Euler-Maclaurin formula: direct summation
/// below N, M Bernoulli correction terms.
struct EmParams {
  int N = 20;
  int M = 12;

  void validate() const;
};

struct EmResult {
  Complex value;
  double err_est = 0.0;  // 2 * |first omitted correction term|
  bool converged = true; // err_est <= kEmTolerance
  EmParams params;
};

inline constexpr double kEmTolerance = 1e-8;

/// sum_{n=1}^{terms} n^{-s}. Throws DomainError("Dirichlet series diverges")
/// for Re s <= 1.
Complex zeta_dirichlet(const Complex& s, std::int64_t terms);

/// Parameters used when none are given. For Re s >= 0 this is
/// N = max(20, ceil(2|Im s|)), M = 12. For Re s < 0 the direct sum grows like
/// N^(1 - Re s), so N is picked in [2, that bound] to balance the omitted
/// correction term against rounding in the cancelling sum.
EmParams auto_em_params(const Complex& s);

/// Zeta continuation at s != 1:
///   sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2
///     + sum_{j=1}^{M} b_2j/(2j)! s(s+1)...(s+2j-2) N^(-s-2j+1).
/// Throws DomainError("pole of the continuation") at s = 1.
EmResult aleph_em(const Complex& s);
EmResult aleph_em(const Complex& s, const EmParams& params);

/// N -> infinity form without the remainder:
///   1/(s-1) + 1/2 + sum_{j=1}^{M} b_2j/(2j)! s(s+1)...(s+2j-2).
Complex em_limit_head(const Complex& s, int M);

/// Remainder sigma_M(s) = -s(s+1)...(s+2M)/(2M+1)! *
///   int_1^inf B*_{2M+1}(x) x^(-s-2M-1) dx,
/// integrated unit interval by unit interval. Validation path only:
/// requires 1 <= M <= 8 and Re s > 1 - 2M, else DomainError("sigma_M domain").
Complex sigma_M_direct(const Complex& s, int M);

}  // namespace zeta
