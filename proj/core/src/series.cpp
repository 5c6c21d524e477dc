#include "postlie/series.hpp"

#include <stdexcept>

namespace postlie {

TruncatedSeries::TruncatedSeries(int order, ForestVector coefficients)
    : order_(order), coeffs_(coefficients.truncated(order)) {
  if (order < 0) throw std::invalid_argument("truncation order must be >= 0");
}

TruncatedSeries TruncatedSeries::delta(const Forest& f, int order) {
  if (f.grade() > order)
    throw std::out_of_range("forest grade exceeds truncation order");
  return TruncatedSeries(order, ForestVector::of(f));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  coeffs_ += o.coeffs_;
  coeffs_ = coeffs_.truncated(order_);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
  coeffs_ *= c;
  return *this;
}

Rational pairing(const TruncatedSeries& alpha, const Forest& omega) {
  if (omega.grade() > alpha.order())
    throw std::out_of_range("pairing beyond truncation order " +
                            std::to_string(alpha.order()));
  return alpha.coefficients().coefficient(omega);
}

namespace {

template <typename Product>
TruncatedSeries exp_impl(const TruncatedSeries& alpha, int n, Product product) {
  if (alpha.coefficients().coefficient(Forest{}) != 0)
    throw std::invalid_argument("exponential requires zero constant term");
  ForestVector base = alpha.coefficients().truncated(n);
  ForestVector sum = ForestVector::unit();
  ForestVector power = ForestVector::unit();
  Rational kfac = 1;
  // base has no constant term, so its k-th power starts at grade k
  for (int k = 1; k <= n; ++k) {
    power = product(power, base).truncated(n);
    if (power.is_zero()) break;
    kfac *= k;
    sum += Rational(1) / kfac * power;
  }
  return TruncatedSeries(n, sum);
}

}  // namespace

TruncatedSeries exp_star(const TruncatedSeries& alpha, int n) {
  return exp_impl(alpha, n, [](const ForestVector& a, const ForestVector& b) {
    return gl_product(a, b);
  });
}

TruncatedSeries exp_dot(const TruncatedSeries& alpha, int n) {
  return exp_impl(alpha, n, [](const ForestVector& a, const ForestVector& b) {
    return concat(a, b);
  });
}

}  // namespace postlie
