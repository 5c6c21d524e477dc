#include "postlie/poly.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace postlie {

Poly::Poly(int nvars) : nvars_(nvars) {
  if (nvars > kMaxVars) throw std::invalid_argument("Poly supports at most 9 variables");
}

Poly Poly::constant(int nvars, double c) {
  Poly p(nvars);
  p.add_term(Key{0}, c);
  return p;
}

Poly Poly::variable(int nvars, int index) {
  Poly p(nvars);
  p.add_term(Key{1} << (kBitsPerVar * index), 1.0);
  return p;
}

int Poly::degree() const {
  int d = 0;
  for (const auto& [k, c] : terms_) {
    int sum = 0;
    for (int i = 0; i < nvars_; ++i) sum += exponent(k, i);
    d = std::max(d, sum);
  }
  return d;
}

double Poly::eval(const Eigen::VectorXd& q) const {
  assert(q.size() == nvars_);
  double total = 0.0;
  for (const auto& [k, c] : terms_) {
    double m = c;
    for (int i = 0; i < nvars_; ++i) {
      int e = exponent(k, i);
      for (int j = 0; j < e; ++j) m *= q[i];
    }
    total += m;
  }
  return total;
}

Poly Poly::derivative(int var) const {
  Poly out(nvars_);
  const Key unit = Key{1} << (kBitsPerVar * var);
  for (const auto& [k, c] : terms_) {
    int e = exponent(k, var);
    if (e == 0) continue;
    out.add_term(k - unit, c * e);
  }
  return out;
}

void Poly::add_term(Key k, double c) {
  if (c == 0.0) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  if (nvars_ == 0 && !o.terms_.empty()) nvars_ = o.nvars_;
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (nvars_ == 0 && !o.terms_.empty()) nvars_ = o.nvars_;
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

Poly& Poly::operator*=(double c) {
  if (c == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, coeff] : terms_) coeff *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  // packed exponents add without carries while per-variable degrees stay
  // below 128, which the combinator degree cap guarantees
  Poly out(std::max(a.nvars_, b.nvars_));
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      out.add_term(ka + kb, ca * cb);
    }
  }
  return out;
}

Poly Poly::operator-() const {
  Poly p = *this;
  return p *= -1.0;
}

Eigen::MatrixXd PolyMat::eval(const Eigen::VectorXd& q) const {
  Eigen::MatrixXd out(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) out(r, c) = at(r, c).eval(q);
  return out;
}

Eigen::VectorXd eval(const PolyVec& v, const Eigen::VectorXd& q) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = v[i].eval(q);
  return out;
}

int degree(const PolyVec& v) {
  int d = 0;
  for (const auto& p : v) d = std::max(d, p.degree());
  return d;
}

int degree(const PolyMat& m) {
  int d = 0;
  for (const auto& p : m.data) d = std::max(d, p.degree());
  return d;
}

PolyVec mat_vec(const PolyMat& m, const PolyVec& v) {
  if (static_cast<std::size_t>(m.cols) != v.size())
    throw std::invalid_argument("mat_vec dimension mismatch");
  PolyVec out;
  out.reserve(static_cast<std::size_t>(m.rows));
  for (int r = 0; r < m.rows; ++r) {
    Poly acc(v.empty() ? 0 : v[0].nvars());
    for (int c = 0; c < m.cols; ++c) acc += m.at(r, c) * v[static_cast<std::size_t>(c)];
    out.push_back(std::move(acc));
  }
  return out;
}

PolyMat mat_mul(const PolyMat& a, const PolyMat& b) {
  if (a.cols != b.rows) throw std::invalid_argument("mat_mul dimension mismatch");
  int nv = a.rows && a.cols ? a.at(0, 0).nvars() : 0;
  PolyMat out(a.rows, b.cols, nv);
  for (int r = 0; r < a.rows; ++r)
    for (int c = 0; c < b.cols; ++c) {
      Poly acc(nv);
      for (int k = 0; k < a.cols; ++k) acc += a.at(r, k) * b.at(k, c);
      out.at(r, c) = std::move(acc);
    }
  return out;
}

PolyMat mat_add(const PolyMat& a, const PolyMat& b) {
  PolyMat out = a;
  for (int r = 0; r < a.rows; ++r)
    for (int c = 0; c < a.cols; ++c) out.at(r, c) += b.at(r, c);
  return out;
}

PolyMat mat_sub(const PolyMat& a, const PolyMat& b) {
  PolyMat out = a;
  for (int r = 0; r < a.rows; ++r)
    for (int c = 0; c < a.cols; ++c) out.at(r, c) -= b.at(r, c);
  return out;
}

PolyMat transpose(const PolyMat& m) {
  PolyMat out(m.cols, m.rows, m.rows && m.cols ? m.at(0, 0).nvars() : 0);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) out.at(c, r) = m.at(r, c);
  return out;
}

PolyMat outer(const PolyVec& col, const PolyVec& row) {
  int nv = col.empty() ? 0 : col[0].nvars();
  PolyMat out(static_cast<int>(col.size()), static_cast<int>(row.size()), nv);
  for (std::size_t r = 0; r < col.size(); ++r)
    for (std::size_t c = 0; c < row.size(); ++c)
      out.at(static_cast<int>(r), static_cast<int>(c)) = col[r] * row[c];
  return out;
}

Poly dot(const PolyVec& a, const PolyVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot dimension mismatch");
  Poly acc(a.empty() ? 0 : a[0].nvars());
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

PolyVec vec_add(const PolyVec& a, const PolyVec& b) {
  PolyVec out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

PolyVec vec_sub(const PolyVec& a, const PolyVec& b) {
  PolyVec out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

PolyVec vec_scale(const Poly& s, const PolyVec& v) {
  PolyVec out;
  out.reserve(v.size());
  for (const auto& p : v) out.push_back(s * p);
  return out;
}

PolyVec directional(const PolyVec& v, const PolyVec& dir) {
  PolyVec out;
  out.reserve(v.size());
  for (const auto& comp : v) {
    Poly acc(comp.nvars());
    for (std::size_t k = 0; k < dir.size(); ++k)
      acc += comp.derivative(static_cast<int>(k)) * dir[k];
    out.push_back(std::move(acc));
  }
  return out;
}

PolyMat directional(const PolyMat& m, const PolyVec& dir) {
  PolyMat out = m;
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) {
      Poly acc(m.at(r, c).nvars());
      for (std::size_t k = 0; k < dir.size(); ++k)
        acc += m.at(r, c).derivative(static_cast<int>(k)) * dir[k];
      out.at(r, c) = std::move(acc);
    }
  return out;
}

PolyVec const_vec(const Eigen::VectorXd& v, int nvars) {
  PolyVec out;
  out.reserve(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(Poly::constant(nvars, v[i]));
  return out;
}

PolyMat const_mat(const Eigen::MatrixXd& m, int nvars) {
  PolyMat out(static_cast<int>(m.rows()), static_cast<int>(m.cols()), nvars);
  for (int r = 0; r < out.rows; ++r)
    for (int c = 0; c < out.cols; ++c) out.at(r, c) = Poly::constant(nvars, m(r, c));
  return out;
}

PolyVec coords(int nvars) {
  PolyVec out;
  out.reserve(static_cast<std::size_t>(nvars));
  for (int i = 0; i < nvars; ++i) out.push_back(Poly::variable(nvars, i));
  return out;
}

}  // namespace postlie
