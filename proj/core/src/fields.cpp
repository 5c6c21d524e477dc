#include "postlie/fields.hpp"

#include <stdexcept>

namespace postlie {

namespace fd {

Eigen::VectorXd directional(const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& f,
                            const Eigen::VectorXd& q, const Eigen::VectorXd& u, double h) {
  return (-f(q + 2 * h * u) + 8 * f(q + h * u) - 8 * f(q - h * u) + f(q - 2 * h * u)) /
         (12 * h);
}

double directional(const std::function<double(const Eigen::VectorXd&)>& f,
                   const Eigen::VectorXd& q, const Eigen::VectorXd& u, double h) {
  return (-f(q + 2 * h * u) + 8 * f(q + h * u) - 8 * f(q - h * u) + f(q - 2 * h * u)) /
         (12 * h);
}

Eigen::MatrixXd directional(const std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>& f,
                            const Eigen::VectorXd& q, const Eigen::VectorXd& u, double h) {
  return (-f(q + 2 * h * u) + 8 * f(q + h * u) - 8 * f(q - h * u) + f(q - 2 * h * u)) /
         (12 * h);
}

}  // namespace fd

ScalarField ScalarField::from_poly(BackendKind kind, Poly p) {
  ScalarField s;
  s.kind_ = kind;
  s.dim_ = p.nvars();
  s.grad_poly_ = PolyVec{};
  for (int i = 0; i < p.nvars(); ++i) s.grad_poly_->push_back(p.derivative(i));
  s.poly_ = std::move(p);
  return s;
}

ScalarField ScalarField::from_closure(BackendKind kind, int ambient_dim,
                                      std::function<double(const Eigen::VectorXd&)> value) {
  ScalarField s;
  s.kind_ = kind;
  s.dim_ = ambient_dim;
  s.value_fn_ = std::move(value);
  return s;
}

double ScalarField::value(const Eigen::VectorXd& q) const {
  return poly_ ? poly_->eval(q) : value_fn_(q);
}

Eigen::VectorXd ScalarField::gradient(const Eigen::VectorXd& q) const {
  if (grad_poly_) return eval(*grad_poly_, q);
  Eigen::VectorXd g(dim_);
  for (int i = 0; i < dim_; ++i) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(dim_);
    e[i] = 1.0;
    g[i] = fd::directional(value_fn_, q, e);
  }
  return g;
}

double ScalarField::directional(const Eigen::VectorXd& q, const Eigen::VectorXd& u) const {
  if (grad_poly_) return eval(*grad_poly_, q).dot(u);
  return fd::directional(value_fn_, q, u);
}

VectorField VectorField::from_poly(BackendKind kind, PolyVec components, std::string name) {
  VectorField v;
  v.kind_ = kind;
  v.dim_ = static_cast<int>(components.size());
  v.name_ = std::move(name);
  PolyMat jac(v.dim_, v.dim_, v.dim_);
  for (int r = 0; r < v.dim_; ++r)
    for (int c = 0; c < v.dim_; ++c)
      jac.at(r, c) = components[static_cast<std::size_t>(r)].derivative(c);
  v.jac_poly_ = std::move(jac);
  v.poly_ = std::move(components);
  return v;
}

VectorField VectorField::from_closure(
    BackendKind kind, int ambient_dim,
    std::function<Eigen::VectorXd(const Eigen::VectorXd&)> value, std::string name) {
  VectorField v;
  v.kind_ = kind;
  v.dim_ = ambient_dim;
  v.name_ = std::move(name);
  v.value_fn_ = std::move(value);
  return v;
}

Eigen::VectorXd VectorField::value(const Eigen::VectorXd& q) const {
  return poly_ ? eval(*poly_, q) : value_fn_(q);
}

Eigen::MatrixXd VectorField::jacobian(const Eigen::VectorXd& q) const {
  if (jac_poly_) return jac_poly_->eval(q);
  Eigen::MatrixXd j(dim_, dim_);
  for (int c = 0; c < dim_; ++c) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(dim_);
    e[c] = 1.0;
    j.col(c) = fd::directional(value_fn_, q, e);
  }
  return j;
}

Eigen::VectorXd VectorField::directional(const Eigen::VectorXd& q,
                                         const Eigen::VectorXd& u) const {
  if (jac_poly_) return jac_poly_->eval(q) * u;
  return fd::directional(value_fn_, q, u);
}

VectorField& VectorField::operator+=(const VectorField& o) {
  check_same_space(*this, o);
  if (poly_ && o.poly_) {
    *this = from_poly(kind_, vec_add(*poly_, *o.poly_), name_);
    return *this;
  }
  auto lhs = *this;
  *this = from_closure(
      kind_, dim_,
      [lhs, rhs = o](const Eigen::VectorXd& q) { return lhs.value(q) + rhs.value(q); },
      name_);
  return *this;
}

VectorField operator-(const VectorField& a, const VectorField& b) {
  check_same_space(a, b);
  if (a.poly_ && b.poly_) return VectorField::from_poly(a.kind_, vec_sub(*a.poly_, *b.poly_));
  return VectorField::from_closure(a.kind_, a.dim_, [a, b](const Eigen::VectorXd& q) {
    return a.value(q) - b.value(q);
  });
}

VectorField operator*(double c, const VectorField& a) {
  if (a.poly_) {
    PolyVec scaled = *a.poly_;
    for (auto& p : scaled) p *= c;
    return VectorField::from_poly(a.kind_, std::move(scaled));
  }
  return VectorField::from_closure(a.kind_, a.dim_, [c, a](const Eigen::VectorXd& q) {
    return (c * a.value(q)).eval();
  });
}

EndoField EndoField::from_poly(BackendKind kind, PolyMat components, std::string name) {
  EndoField e;
  e.kind_ = kind;
  e.dim_ = components.rows;
  e.name_ = std::move(name);
  e.poly_ = std::move(components);
  return e;
}

EndoField EndoField::from_closure(BackendKind kind, int ambient_dim,
                                  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> value,
                                  std::string name) {
  EndoField e;
  e.kind_ = kind;
  e.dim_ = ambient_dim;
  e.name_ = std::move(name);
  e.value_fn_ = std::move(value);
  return e;
}

EndoField EndoField::zero(BackendKind kind, int ambient_dim) {
  return from_poly(kind, PolyMat(ambient_dim, ambient_dim, ambient_dim), "0");
}

Eigen::MatrixXd EndoField::value(const Eigen::VectorXd& q) const {
  return poly_ ? poly_->eval(q) : value_fn_(q);
}

Eigen::MatrixXd EndoField::directional(const Eigen::VectorXd& q,
                                       const Eigen::VectorXd& u) const {
  if (poly_) {
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim_, dim_);
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < dim_; ++c) {
        double acc = 0.0;
        for (int k = 0; k < dim_; ++k)
          acc += poly_->at(r, c).derivative(k).eval(q) * u[k];
        out(r, c) = acc;
      }
    return out;
  }
  return fd::directional(value_fn_, q, u);
}

bool EndoField::is_zero_poly() const {
  if (!poly_) return false;
  for (const auto& p : poly_->data)
    if (!p.is_zero()) return false;
  return true;
}

EndoField& EndoField::operator+=(const EndoField& o) {
  check_same_space(*this, o);
  if (poly_ && o.poly_) {
    *this = from_poly(kind_, mat_add(*poly_, *o.poly_), name_);
    return *this;
  }
  auto lhs = *this;
  *this = from_closure(
      kind_, dim_,
      [lhs, rhs = o](const Eigen::VectorXd& q) { return lhs.value(q) + rhs.value(q); },
      name_);
  return *this;
}

EndoField operator-(const EndoField& a, const EndoField& b) {
  check_same_space(a, b);
  if (a.poly_ && b.poly_) return EndoField::from_poly(a.kind_, mat_sub(*a.poly_, *b.poly_));
  return EndoField::from_closure(a.kind_, a.dim_, [a, b](const Eigen::VectorXd& q) {
    return a.value(q) - b.value(q);
  });
}

EndoField operator*(double c, const EndoField& a) {
  if (a.poly_) {
    PolyMat scaled = *a.poly_;
    for (auto& p : scaled.data) p *= c;
    return EndoField::from_poly(a.kind_, std::move(scaled));
  }
  return EndoField::from_closure(a.kind_, a.dim_, [c, a](const Eigen::VectorXd& q) {
    return (c * a.value(q)).eval();
  });
}

VectorField apply_endo(const EndoField& e, const VectorField& y) {
  check_same_space(y, e);
  if (e.is_polynomial() && y.is_polynomial())
    return VectorField::from_poly(y.kind(), mat_vec(e.polys(), y.polys()));
  return VectorField::from_closure(y.kind(), y.ambient_dim(),
                                   [e, y](const Eigen::VectorXd& q) {
                                     return (e.value(q) * y.value(q)).eval();
                                   });
}

EndoField compose(const EndoField& a, const EndoField& b) {
  check_same_space(a, b);
  if (a.is_polynomial() && b.is_polynomial())
    return EndoField::from_poly(a.kind(), mat_mul(a.polys(), b.polys()));
  return EndoField::from_closure(a.kind(), a.ambient_dim(), [a, b](const Eigen::VectorXd& q) {
    return (a.value(q) * b.value(q)).eval();
  });
}

EndoField commutator(const EndoField& a, const EndoField& b) {
  return compose(a, b) - compose(b, a);
}

EndoField outer_field(const VectorField& x, const VectorField& y) {
  check_same_space(x, y);
  if (x.is_polynomial() && y.is_polynomial())
    return EndoField::from_poly(x.kind(), outer(x.polys(), y.polys()));
  return EndoField::from_closure(x.kind(), x.ambient_dim(), [x, y](const Eigen::VectorXd& q) {
    return (x.value(q) * y.value(q).transpose()).eval();
  });
}

ScalarField lie_derivative(const VectorField& x, const ScalarField& phi) {
  if (x.kind() != phi.kind() || x.ambient_dim() != phi.ambient_dim())
    throw std::invalid_argument("lie_derivative: backend mismatch");
  if (x.is_polynomial() && phi.is_polynomial()) {
    Poly acc(phi.ambient_dim());
    for (int i = 0; i < phi.ambient_dim(); ++i)
      acc += phi.poly().derivative(i) * x.polys()[static_cast<std::size_t>(i)];
    return ScalarField::from_poly(x.kind(), std::move(acc));
  }
  return ScalarField::from_closure(x.kind(), x.ambient_dim(), [x, phi](const Eigen::VectorXd& q) {
    return phi.directional(q, x.value(q));
  });
}

void check_same_space(const VectorField& a, const VectorField& b) {
  if (a.kind() != b.kind() || a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("vector fields live on different backends");
}

void check_same_space(const VectorField& a, const EndoField& b) {
  if (a.kind() != b.kind() || a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("vector/endomorphism fields live on different backends");
}

void check_same_space(const EndoField& a, const EndoField& b) {
  if (a.kind() != b.kind() || a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("endomorphism fields live on different backends");
}

}  // namespace postlie
