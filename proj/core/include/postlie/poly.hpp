#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <map>
#include <vector>

namespace postlie {

/// Sparse multivariate polynomial with double coefficients. Preset vector
/// and endomorphism fields are polynomial in the ambient coordinates, so
/// every derivative the covariant towers need is computed exactly here
/// instead of by finite differences.
///
/// Monomials are packed 7 bits per variable into one word, which limits a
/// polynomial to at most 9 variables (enough for flattened 3x3 matrices)
/// and degree < 128 per variable.
class Poly {
 public:
  using Key = std::uint64_t;
  static constexpr int kBitsPerVar = 7;
  static constexpr int kMaxVars = 9;

  Poly() : nvars_(0) {}
  explicit Poly(int nvars);
  static Poly constant(int nvars, double c);
  static Poly variable(int nvars, int index);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  std::size_t term_count() const { return terms_.size(); }

  double eval(const Eigen::VectorXd& q) const;
  Poly derivative(int var) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(double c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(double c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;

  static int exponent(Key k, int var) {
    return static_cast<int>((k >> (kBitsPerVar * var)) & 0x7F);
  }

 private:
  void add_term(Key k, double c);

  std::map<Key, double> terms_;
  int nvars_;
};

using PolyVec = std::vector<Poly>;

/// Dense matrix of polynomials (row-major).
struct PolyMat {
  int rows = 0, cols = 0;
  std::vector<Poly> data;

  PolyMat() = default;
  PolyMat(int r, int c, int nvars)
      : rows(r), cols(c), data(static_cast<std::size_t>(r * c), Poly(nvars)) {}
  Poly& at(int r, int c) { return data[static_cast<std::size_t>(r * cols + c)]; }
  const Poly& at(int r, int c) const { return data[static_cast<std::size_t>(r * cols + c)]; }
  Eigen::MatrixXd eval(const Eigen::VectorXd& q) const;
};

Eigen::VectorXd eval(const PolyVec& v, const Eigen::VectorXd& q);
int degree(const PolyVec& v);
int degree(const PolyMat& m);
PolyVec mat_vec(const PolyMat& m, const PolyVec& v);
PolyMat mat_mul(const PolyMat& a, const PolyMat& b);
PolyMat mat_add(const PolyMat& a, const PolyMat& b);
PolyMat mat_sub(const PolyMat& a, const PolyMat& b);
PolyMat transpose(const PolyMat& m);
/// outer product column * row^T of two polynomial vectors
PolyMat outer(const PolyVec& col, const PolyVec& row);
Poly dot(const PolyVec& a, const PolyVec& b);
PolyVec vec_add(const PolyVec& a, const PolyVec& b);
PolyVec vec_sub(const PolyVec& a, const PolyVec& b);
PolyVec vec_scale(const Poly& s, const PolyVec& v);
/// directional derivative of each component along the polynomial direction:
/// out_i = sum_k d v_i / d q_k * dir_k
PolyVec directional(const PolyVec& v, const PolyVec& dir);
PolyMat directional(const PolyMat& m, const PolyVec& dir);
/// constant embeddings
PolyVec const_vec(const Eigen::VectorXd& v, int nvars);
PolyMat const_mat(const Eigen::MatrixXd& m, int nvars);
/// the coordinate vector (q_0, ..., q_{n-1})
PolyVec coords(int nvars);

}  // namespace postlie
