#include "zeta/bernoulli.hpp"

#include "zeta/numerics.hpp"

#include <cmath>
#include <string>

namespace zeta {

using boost::multiprecision::cpp_int;

double to_double(const Rational& r) {
  using boost::multiprecision::msb;
  cpp_int num = boost::multiprecision::numerator(r);
  const cpp_int den = boost::multiprecision::denominator(r);
  if (num == 0) return 0.0;
  const bool negative = num < 0;
  if (negative) num = -num;

  // Scale so that the integer quotient carries 55 or 56 significant bits.
  const long long shift = 55 - (static_cast<long long>(msb(num)) -
                                static_cast<long long>(msb(den)));
  cpp_int a = num, b = den;
  if (shift >= 0) a <<= static_cast<unsigned>(shift);
  else b <<= static_cast<unsigned>(-shift);
  cpp_int q, rem;
  boost::multiprecision::divide_qr(a, b, q, rem);
  const bool sticky = rem != 0;

  const unsigned extra = static_cast<unsigned>(msb(q)) + 1 - 53;
  const cpp_int mask = (cpp_int(1) << extra) - 1;
  const cpp_int dropped = q & mask;
  const cpp_int half = cpp_int(1) << (extra - 1);
  q >>= extra;
  if (dropped > half || (dropped == half && (sticky || bit_test(q, 0)))) ++q;

  const double mantissa = q.convert_to<double>();  // < 2^54, exact
  const double value = std::ldexp(mantissa, static_cast<int>(extra) - static_cast<int>(shift));
  return negative ? -value : value;
}

cpp_int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  cpp_int c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

BernoulliTable::BernoulliTable(int max_index) : max_index_(max_index) {
  if (max_index < 1) throw DomainError("Bernoulli table needs max_index >= 1");
  numbers_.reserve(max_index + 1);
  numbers_.emplace_back(1);
  for (int n = 1; n <= max_index; ++n) {
    Rational acc = 0;
    for (int k = 0; k < n; ++k) acc += Rational(binomial(n + 1, k)) * numbers_[k];
    numbers_.push_back(-acc / (n + 1));
  }

  coefficients_.resize(max_index + 1);
  coefficient_values_.resize(max_index + 1);
  for (int n = 0; n <= max_index; ++n) {
    auto& row = coefficients_[n];
    row.resize(n + 1);
    for (int m = 0; m <= n; ++m) row[m] = Rational(binomial(n, n - m)) * numbers_[n - m];
    auto& values = coefficient_values_[n];
    values.reserve(n + 1);
    for (const auto& c : row) values.push_back(to_double(c));
  }
}

const BernoulliTable& BernoulliTable::standard() {
  static const BernoulliTable table(kDefaultMaxIndex);
  return table;
}

void BernoulliTable::check_index(int n) const {
  if (n < 0 || n > max_index_)
    throw DomainError("table exhausted: Bernoulli index " + std::to_string(n));
}

const Rational& BernoulliTable::number(int n) const {
  check_index(n);
  return numbers_[n];
}

double BernoulliTable::number_value(int n) const {
  check_index(n);
  return coefficient_values_[n][0];
}

double BernoulliTable::polynomial(int n, double x) const {
  check_index(n);
  const auto& c = coefficient_values_[n];
  double acc = 0.0;
  for (int m = n; m >= 0; --m) acc = acc * x + c[m];
  return acc;
}

Rational BernoulliTable::polynomial(int n, const Rational& x) const {
  check_index(n);
  const auto& c = coefficients_[n];
  Rational acc = 0;
  for (int m = n; m >= 0; --m) acc = acc * x + c[m];
  return acc;
}

double BernoulliTable::periodic(int n, double x) const {
  require_finite(x, "periodic Bernoulli argument");
  return polynomial(n, x - std::floor(x));
}

const Rational& bernoulli_number(int n) { return BernoulliTable::standard().number(n); }

double bernoulli_polynomial(int n, double x) {
  return BernoulliTable::standard().polynomial(n, x);
}

double periodic_bernoulli(int n, double x) { return BernoulliTable::standard().periodic(n, x); }

}  // namespace zeta
