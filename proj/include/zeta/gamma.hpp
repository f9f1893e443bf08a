// Complex Gamma function (Lanczos approximation with reflection).

#pragma once

#include "zeta/numerics.hpp"

namespace zeta {

/// sin(pi*z) with exact zeros at the integers on the real axis.
Complex sin_pi(const Complex& z);

/// True if z is 0, -1, -2, ... exactly.
bool is_nonpositive_integer(const Complex& z);

/// Gamma(s). Throws DomainError("gamma pole at non-positive integer") at
/// the poles. Relative error stays below 1e-12 for |Im s| <= 100.
Complex complex_gamma(const Complex& s);

/// A logarithm of Gamma(s): exp(log_gamma(s)) == Gamma(s). For Re s >= 1/2
/// the imaginary part follows the Lanczos branch; below that it is only
/// determined modulo 2*pi.
Complex log_gamma(const Complex& s);

/// 1/Gamma(s), an entire function: exactly 0 at the non-positive integers.
Complex reciprocal_gamma(const Complex& s);

}  // namespace zeta
