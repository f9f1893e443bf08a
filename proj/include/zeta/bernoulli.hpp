// Bernoulli numbers b_n = B_n(0), Bernoulli polynomials and their
// 1-periodic extensions.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace zeta {

using Rational = boost::multiprecision::cpp_rational;

/// Correctly rounded (round-half-even) binary64 value of r.
double to_double(const Rational& r);

/// Exact Bernoulli numbers b_0..b_max generated from
/// sum_{k=0}^{n} C(n+1, k) b_k = 0, with b_1 = -1/2.
class BernoulliTable {
public:
  static constexpr int kDefaultMaxIndex = 64;

  explicit BernoulliTable(int max_index = kDefaultMaxIndex);

  /// Shared table with the default size, built on first use.
  static const BernoulliTable& standard();

  int max_index() const { return max_index_; }

  /// Throws DomainError("table exhausted") for n outside [0, max_index].
  const Rational& number(int n) const;
  double number_value(int n) const;

  /// B_n(x) = sum_k C(n,k) b_k x^(n-k), evaluated by Horner's rule.
  double polynomial(int n, double x) const;
  Rational polynomial(int n, const Rational& x) const;

  /// B_n(x - floor(x)).
  double periodic(int n, double x) const;

private:
  void check_index(int n) const;

  int max_index_;
  std::vector<Rational> numbers_;
  // coefficients_[n][m] = C(n, n-m) * b_{n-m}, the coefficient of x^m in B_n.
  std::vector<std::vector<Rational>> coefficients_;
  std::vector<std::vector<double>> coefficient_values_;
};

/// Binomial coefficient C(n, k) as an exact integer.
boost::multiprecision::cpp_int binomial(int n, int k);

const Rational& bernoulli_number(int n);
double bernoulli_polynomial(int n, double x);
double periodic_bernoulli(int n, double x);

}  // namespace zeta
