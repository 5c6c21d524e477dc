#pragma once

#include "postlie/forest_vector.hpp"

namespace postlie {

/// A Lie-Butcher series element of the graded dual, represented modulo
/// grade > order: an explicit coefficient map on forests of grade <= order.
class TruncatedSeries {
 public:
  TruncatedSeries(int order, ForestVector coefficients);
  /// The dual basis element of a single forest.
  static TruncatedSeries delta(const Forest& f, int order);
  static TruncatedSeries zero(int order) { return TruncatedSeries(order, {}); }

  int order() const { return order_; }
  const ForestVector& coefficients() const { return coeffs_; }

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const Rational& c);

 private:
  int order_;
  ForestVector coeffs_;
};

/// The stored coefficient of the forest; requesting a forest beyond the
/// truncation order is an out-of-range error, never a silent zero.
Rational pairing(const TruncatedSeries& alpha, const Forest& omega);

/// Exponential with respect to the Grossman-Larson product, truncated at
/// grade n. alpha must have zero coefficient on the empty forest.
TruncatedSeries exp_star(const TruncatedSeries& alpha, int n);

/// Exponential with respect to concatenation, truncated at grade n.
TruncatedSeries exp_dot(const TruncatedSeries& alpha, int n);

}  // namespace postlie
