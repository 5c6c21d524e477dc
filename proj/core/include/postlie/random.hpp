#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <random>

namespace postlie {

// All sampling goes through these helpers so that a fixed 64-bit seed gives
// bit-identical streams on every platform (std distributions are
// implementation-defined, the raw engine output is not).

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

inline double gaussian(std::mt19937_64& rng) {
  // Box-Muller; guard the log away from 0
  double u1 = uniform01(rng);
  while (u1 <= 1e-300) u1 = uniform01(rng);
  double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

inline Eigen::VectorXd gaussian_vector(std::mt19937_64& rng, int n) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = gaussian(rng);
  return v;
}

inline Eigen::MatrixXd gaussian_matrix(std::mt19937_64& rng, int r, int c) {
  Eigen::MatrixXd m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = gaussian(rng);
  return m;
}

inline Eigen::MatrixXd random_skew(std::mt19937_64& rng, int n) {
  Eigen::MatrixXd a = gaussian_matrix(rng, n, n);
  return 0.5 * (a - a.transpose());
}

/// Haar-ish random rotation via QR of a Gaussian matrix, det fixed to +1.
inline Eigen::MatrixXd random_rotation(std::mt19937_64& rng, int n) {
  Eigen::MatrixXd a = gaussian_matrix(rng, n, n);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ();
  if (q.determinant() < 0) q.col(0) *= -1.0;
  return q;
}

}  // namespace postlie
