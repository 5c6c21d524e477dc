#include "postlie/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "postlie/random.hpp"

namespace postlie {

namespace {

double sinc(double t) {
  if (std::abs(t) < 1e-8) return 1.0 - t * t / 6.0;
  return std::sin(t) / t;
}

double one_minus_cos_over_sq(double t) {
  if (std::abs(t) < 1e-6) return 0.5 - t * t / 24.0;
  return (1.0 - std::cos(t)) / (t * t);
}

}  // namespace

void ConnectionBackend::check_field(const VectorField& f) const {
  if (f.kind() != kind() || f.ambient_dim() != ambient_dim())
    throw std::invalid_argument("vector field does not live on backend " + name());
}

void ConnectionBackend::check_field(const EndoField& f) const {
  if (f.kind() != kind() || f.ambient_dim() != ambient_dim())
    throw std::invalid_argument("endomorphism field does not live on backend " + name());
}

void ConnectionBackend::check_point(const Eigen::VectorXd& p) const {
  if (p.size() != ambient_dim())
    throw std::invalid_argument("point has wrong ambient dimension for backend " + name());
}

VectorField ConnectionBackend::torsion_field(const VectorField& x, const VectorField& y) const {
  return cov_deriv_vec(x, y) - cov_deriv_vec(y, x) - jacobi_bracket(x, y);
}

VectorField ConnectionBackend::curvature_apply(const VectorField& x, const VectorField& y,
                                               const VectorField& z) const {
  return cov_deriv_vec(x, cov_deriv_vec(y, z)) - cov_deriv_vec(y, cov_deriv_vec(x, z)) -
         cov_deriv_vec(jacobi_bracket(x, y), z);
}

Eigen::MatrixXd ConnectionBackend::curvature_matrix(const VectorField& x, const VectorField& y,
                                                    const Eigen::VectorXd& p) const {
  const int n = ambient_dim();
  Eigen::MatrixXd r(n, n);
  for (int k = 0; k < n; ++k) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
    e[k] = 1.0;
    r.col(k) = curvature_apply(x, y, projected_constant_field(e)).value(p);
  }
  return r;
}

// ---------------------------------------------------------------------------
// flat space

VectorField FlatBackend::cov_deriv_vec(const VectorField& x, const VectorField& y) const {
  check_field(x);
  check_field(y);
  if (x.is_polynomial() && y.is_polynomial())
    return VectorField::from_poly(kind(), directional(y.polys(), x.polys()));
  return VectorField::from_closure(kind(), m_, [x, y](const Eigen::VectorXd& q) {
    return y.directional(q, x.value(q));
  });
}

EndoField FlatBackend::cov_deriv_endo(const VectorField& x, const EndoField& e) const {
  check_field(x);
  check_field(e);
  if (x.is_polynomial() && e.is_polynomial())
    return EndoField::from_poly(kind(), directional(e.polys(), x.polys()));
  return EndoField::from_closure(kind(), m_, [x, e](const Eigen::VectorXd& q) {
    return e.directional(q, x.value(q));
  });
}

VectorField FlatBackend::jacobi_bracket(const VectorField& x, const VectorField& y) const {
  check_field(x);
  check_field(y);
  if (x.is_polynomial() && y.is_polynomial())
    return VectorField::from_poly(
        kind(), vec_sub(directional(y.polys(), x.polys()), directional(x.polys(), y.polys())));
  return VectorField::from_closure(kind(), m_, [x, y](const Eigen::VectorXd& q) {
    return (y.directional(q, x.value(q)) - x.directional(q, y.value(q))).eval();
  });
}

VectorField FlatBackend::torsion_tensor_field(const VectorField& x, const VectorField& y) const {
  check_field(x);
  check_field(y);
  return VectorField::from_poly(kind(), PolyVec(static_cast<std::size_t>(m_), Poly(m_)));
}

VectorField FlatBackend::projected_constant_field(const Eigen::VectorXd& c) const {
  return VectorField::from_poly(kind(), const_vec(c, m_));
}

Eigen::VectorXd FlatBackend::random_point(std::mt19937_64& rng) const {
  Eigen::VectorXd p(m_);
  for (int i = 0; i < m_; ++i) p[i] = uniform(rng, -1.0, 1.0);
  return p;
}

Eigen::VectorXd FlatBackend::random_tangent(std::mt19937_64& rng, const Eigen::VectorXd&) const {
  return gaussian_vector(rng, m_);
}

VectorField FlatBackend::affine_field(const Eigen::MatrixXd& a, const Eigen::VectorXd& c) const {
  PolyVec comp = vec_add(mat_vec(const_mat(a, m_), coords(m_)), const_vec(c, m_));
  return VectorField::from_poly(kind(), std::move(comp));
}

EndoField FlatBackend::constant_endo(const Eigen::MatrixXd& s) const {
  return EndoField::from_poly(kind(), const_mat(s, m_));
}

ScalarField FlatBackend::linear_scalar(const Eigen::VectorXd& c) const {
  return ScalarField::from_poly(kind(), dot(const_vec(c, m_), coords(m_)));
}

ScalarField FlatBackend::quadratic_scalar(const Eigen::MatrixXd& q) const {
  auto x = coords(m_);
  return ScalarField::from_poly(kind(), dot(x, mat_vec(const_mat(q, m_), x)));
}

// ---------------------------------------------------------------------------
// unit sphere

SphereBackend::SphereBackend(int m) : m_(m) {
  if (m < 2) throw std::invalid_argument("sphere dimension must be >= 2");
  const int n = m_ + 1;
  proj_ = PolyMat(n, n, n);
  auto q = coords(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      Poly entry = -(q[static_cast<std::size_t>(r)] * q[static_cast<std::size_t>(c)]);
      if (r == c) entry += Poly::constant(n, 1.0);
      proj_.at(r, c) = std::move(entry);
    }
}

double SphereBackend::off_manifold_error(const Eigen::VectorXd& q) const {
  return std::abs(q.norm() - 1.0);
}

Eigen::VectorXd SphereBackend::project_point(const Eigen::VectorXd& q) const {
  double n = q.norm();
  if (n == 0.0) throw std::domain_error("cannot project the origin onto the sphere");
  return q / n;
}

Eigen::VectorXd SphereBackend::project_tangent(const Eigen::VectorXd& p,
                                               const Eigen::VectorXd& v) const {
  return v - p.dot(v) * p;
}

double SphereBackend::tangency_error(const Eigen::VectorXd& p, const Eigen::VectorXd& v) const {
  return std::abs(p.dot(v));
}

Eigen::VectorXd SphereBackend::exp(const Eigen::VectorXd& p, const Eigen::VectorXd& v) const {
  double theta = v.norm();
  return std::cos(theta) * p + sinc(theta) * v;
}

Eigen::VectorXd SphereBackend::log(const Eigen::VectorXd& phat, const Eigen::VectorXd& p) const {
  double s = std::clamp(phat.dot(p), -1.0, 1.0);
  if (s <= -1.0 + 1e-9)
    throw std::domain_error("log undefined near the antipode");
  Eigen::VectorXd w = p - s * phat;
  double wn = w.norm();
  if (wn < 1e-14) return Eigen::VectorXd::Zero(m_ + 1);
  return std::acos(s) * w / wn;
}

Eigen::VectorXd SphereBackend::transport(const Eigen::VectorXd& phat, const Eigen::VectorXd& p,
                                         const Eigen::VectorXd& v) const {
  double s = std::clamp(phat.dot(p), -1.0, 1.0);
  if (!(s > 0.0))
    throw std::domain_error("parallel transport only defined on the open hemisphere");
  Eigen::VectorXd w = p - s * phat;
  double wn = w.norm();
  if (wn < 1e-14) return v;
  w /= wn;
  double vw = v.dot(w);
  return v + vw * (-std::sqrt(std::max(0.0, 1.0 - s * s)) * phat + (s - 1.0) * w);
}

bool SphereBackend::in_transport_domain(const Eigen::VectorXd& phat,
                                        const Eigen::VectorXd& p) const {
  return phat.dot(p) > 0.0;
}

VectorField SphereBackend::cov_deriv_vec(const VectorField& x, const VectorField& y) const {
  check_field(x);
  check_field(y);
  if (x.is_polynomial() && y.is_polynomial())
    return VectorField::from_poly(kind(),
                                  mat_vec(proj_, directional(y.polys(), x.polys())));
  const int n = m_ + 1;
  return VectorField::from_closure(kind(), n, [x, y](const Eigen::VectorXd& q) {
    Eigen::VectorXd d = y.directional(q, x.value(q));
    return (d - q.dot(d) * q).eval();
  });
}

EndoField SphereBackend::cov_deriv_endo(const VectorField& x, const EndoField& e) const {
  check_field(x);
  check_field(e);
  if (x.is_polynomial() && e.is_polynomial())
    return EndoField::from_poly(
        kind(), mat_mul(proj_, mat_mul(directional(e.polys(), x.polys()), proj_)));
  const int n = m_ + 1;
  return EndoField::from_closure(kind(), n, [x, e](const Eigen::VectorXd& q) {
    Eigen::MatrixXd pi = Eigen::MatrixXd::Identity(q.size(), q.size()) - q * q.transpose();
    return (pi * e.directional(q, x.value(q)) * pi).eval();
  });
}

VectorField SphereBackend::jacobi_bracket(const VectorField& x, const VectorField& y) const {
  check_field(x);
  check_field(y);
  if (x.is_polynomial() && y.is_polynomial())
    return VectorField::from_poly(
        kind(), vec_sub(directional(y.polys(), x.polys()), directional(x.polys(), y.polys())));
  const int n = m_ + 1;
  return VectorField::from_closure(kind(), n, [x, y](const Eigen::VectorXd& q) {
    return (y.directional(q, x.value(q)) - x.directional(q, y.value(q))).eval();
  });
}

Eigen::MatrixXd SphereBackend::curvature_endo(const Eigen::VectorXd&, const Eigen::VectorXd& u,
                                              const Eigen::VectorXd& v) const {
  return u * v.transpose() - v * u.transpose();
}

VectorField SphereBackend::torsion_tensor_field(const VectorField& x, const VectorField& y) const {
  check_field(x);
  check_field(y);
  return VectorField::from_poly(kind(), PolyVec(static_cast<std::size_t>(m_ + 1), Poly(m_ + 1)));
}

EndoField SphereBackend::curvature_endo_field(const VectorField& x, const VectorField& y) const {
  check_field(x);
  check_field(y);
  return outer_field(x, y) - outer_field(y, x);
}

VectorField SphereBackend::projected_constant_field(const Eigen::VectorXd& c) const {
  return VectorField::from_poly(kind(), mat_vec(proj_, const_vec(c, m_ + 1)));
}

Eigen::VectorXd SphereBackend::random_point(std::mt19937_64& rng) const {
  Eigen::VectorXd v = gaussian_vector(rng, m_ + 1);
  while (v.norm() < 1e-6) v = gaussian_vector(rng, m_ + 1);
  return v / v.norm();
}

Eigen::VectorXd SphereBackend::random_tangent(std::mt19937_64& rng,
                                              const Eigen::VectorXd& p) const {
  return project_tangent(p, gaussian_vector(rng, m_ + 1));
}

VectorField SphereBackend::projected_affine_field(const Eigen::MatrixXd& a,
                                                  const Eigen::VectorXd& c) const {
  const int n = m_ + 1;
  PolyVec affine = vec_add(mat_vec(const_mat(a, n), coords(n)), const_vec(c, n));
  return VectorField::from_poly(kind(), mat_vec(proj_, affine));
}

VectorField SphereBackend::rotation_field(const Eigen::MatrixXd& a_skew) const {
  return projected_affine_field(a_skew, Eigen::VectorXd::Zero(m_ + 1));
}

EndoField SphereBackend::compressed_endo(const Eigen::MatrixXd& s) const {
  const int n = m_ + 1;
  return EndoField::from_poly(kind(), mat_mul(proj_, mat_mul(const_mat(s, n), proj_)));
}

ScalarField SphereBackend::linear_scalar(const Eigen::VectorXd& c) const {
  return ScalarField::from_poly(kind(), dot(const_vec(c, m_ + 1), coords(m_ + 1)));
}

ScalarField SphereBackend::quadratic_scalar(const Eigen::MatrixXd& q) const {
  auto x = coords(m_ + 1);
  return ScalarField::from_poly(kind(), dot(x, mat_vec(const_mat(q, m_ + 1), x)));
}

// ---------------------------------------------------------------------------
// SO(3), left trivialization

Eigen::Matrix3d RotationGroupBackend::unflatten(const Eigen::VectorXd& v) {
  Eigen::Matrix3d m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = v[3 * i + j];
  return m;
}

Eigen::VectorXd RotationGroupBackend::flatten(const Eigen::Matrix3d& m) {
  Eigen::VectorXd v(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) v[3 * i + j] = m(i, j);
  return v;
}

Eigen::Matrix3d RotationGroupBackend::hat(const Eigen::Vector3d& w) {
  Eigen::Matrix3d m;
  m << 0, -w.z(), w.y(), w.z(), 0, -w.x(), -w.y(), w.x(), 0;
  return m;
}

RotationGroupBackend::RotationGroupBackend() = default;

double RotationGroupBackend::off_manifold_error(const Eigen::VectorXd& q) const {
  Eigen::Matrix3d p = unflatten(q);
  double ortho = (p.transpose() * p - Eigen::Matrix3d::Identity()).norm();
  double det = std::abs(p.determinant() - 1.0);
  return std::max(ortho, det);
}

Eigen::VectorXd RotationGroupBackend::project_point(const Eigen::VectorXd& q) const {
  Eigen::Matrix3d p = unflatten(q);
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(p, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix3d r = svd.matrixU() * svd.matrixV().transpose();
  if (r.determinant() < 0) {
    Eigen::Matrix3d u = svd.matrixU();
    u.col(2) *= -1.0;
    r = u * svd.matrixV().transpose();
  }
  return flatten(r);
}

Eigen::VectorXd RotationGroupBackend::project_tangent(const Eigen::VectorXd&,
                                                      const Eigen::VectorXd& v) const {
  Eigen::Matrix3d o = unflatten(v);
  return flatten(0.5 * (o - o.transpose()));
}

double RotationGroupBackend::tangency_error(const Eigen::VectorXd&,
                                            const Eigen::VectorXd& v) const {
  Eigen::Matrix3d o = unflatten(v);
  return 0.5 * (o + o.transpose()).norm();
}

Eigen::VectorXd RotationGroupBackend::exp(const Eigen::VectorXd& p,
                                          const Eigen::VectorXd& v) const {
  Eigen::Matrix3d omega = unflatten(v);
  Eigen::Vector3d w(omega(2, 1), omega(0, 2), omega(1, 0));
  double theta = w.norm();
  Eigen::Matrix3d e = Eigen::Matrix3d::Identity() + sinc(theta) * omega +
                      one_minus_cos_over_sq(theta) * omega * omega;
  return flatten(unflatten(p) * e);
}

Eigen::VectorXd RotationGroupBackend::log(const Eigen::VectorXd& phat,
                                          const Eigen::VectorXd& p) const {
  Eigen::Matrix3d m = unflatten(phat).transpose() * unflatten(p);
  double c = std::clamp((m.trace() - 1.0) / 2.0, -1.0, 1.0);
  if (c <= -1.0 + 1e-9)
    throw std::domain_error("log undefined near the cut locus of SO(3)");
  double theta = std::acos(c);
  double scale = (theta < 1e-8) ? 0.5 + theta * theta / 12.0 : theta / (2.0 * std::sin(theta));
  return flatten((scale * (m - m.transpose())).eval());
}

Eigen::VectorXd RotationGroupBackend::transport(const Eigen::VectorXd& phat,
                                                const Eigen::VectorXd& p,
                                                const Eigen::VectorXd& v) const {
  if (!in_transport_domain(phat, p))
    throw std::domain_error("transport undefined near the cut locus of SO(3)");
  return v;  // left-invariant components are parallel (flat connection)
}

bool RotationGroupBackend::in_transport_domain(const Eigen::VectorXd& phat,
                                               const Eigen::VectorXd& p) const {
  Eigen::Matrix3d m = unflatten(phat).transpose() * unflatten(p);
  return (m.trace() - 1.0) / 2.0 > -1.0 + 1e-9;
}

Eigen::VectorXd RotationGroupBackend::ambient_velocity(const Eigen::VectorXd& p,
                                                       const Eigen::VectorXd& v) const {
  return flatten(unflatten(p) * unflatten(v));
}

PolyVec RotationGroupBackend::velocity_polys(const PolyVec& x) const {
  // flatten(mat(q) * mat(x(q))), entries of q are the 9 ambient variables
  PolyVec out(9, Poly(9));
  auto q = coords(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Poly acc(9);
      for (int k = 0; k < 3; ++k)
        acc += q[static_cast<std::size_t>(3 * i + k)] * x[static_cast<std::size_t>(3 * k + j)];
      out[static_cast<std::size_t>(3 * i + j)] = std::move(acc);
    }
  return out;
}

VectorField RotationGroupBackend::cov_deriv_vec(const VectorField& x,
                                                const VectorField& y) const {
  check_field(x);
  check_field(y);
  if (x.is_polynomial() && y.is_polynomial())
    return VectorField::from_poly(kind(), directional(y.polys(), velocity_polys(x.polys())));
  auto self = *this;
  return VectorField::from_closure(kind(), 9, [self, x, y](const Eigen::VectorXd& q) {
    return y.directional(q, self.ambient_velocity(q, x.value(q)));
  });
}

EndoField RotationGroupBackend::cov_deriv_endo(const VectorField& x, const EndoField& e) const {
  check_field(x);
  check_field(e);
  if (x.is_polynomial() && e.is_polynomial())
    return EndoField::from_poly(kind(), directional(e.polys(), velocity_polys(x.polys())));
  auto self = *this;
  return EndoField::from_closure(kind(), 9, [self, x, e](const Eigen::VectorXd& q) {
    return e.directional(q, self.ambient_velocity(q, x.value(q)));
  });
}

VectorField RotationGroupBackend::jacobi_bracket(const VectorField& x,
                                                 const VectorField& y) const {
  check_field(x);
  check_field(y);
  // [x,y]_J = D y[vel_x] - D x[vel_y] + [x, y] under left trivialization
  if (x.is_polynomial() && y.is_polynomial()) {
    PolyVec dy = directional(y.polys(), velocity_polys(x.polys()));
    PolyVec dx = directional(x.polys(), velocity_polys(y.polys()));
    // commutator of the two skew coefficient matrices, as polynomials
    PolyVec comm(9, Poly(9));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Poly acc(9);
        for (int k = 0; k < 3; ++k) {
          acc += x.polys()[static_cast<std::size_t>(3 * i + k)] *
                 y.polys()[static_cast<std::size_t>(3 * k + j)];
          acc -= y.polys()[static_cast<std::size_t>(3 * i + k)] *
                 x.polys()[static_cast<std::size_t>(3 * k + j)];
        }
        comm[static_cast<std::size_t>(3 * i + j)] = std::move(acc);
      }
    return VectorField::from_poly(kind(), vec_add(vec_sub(dy, dx), comm));
  }
  auto self = *this;
  return VectorField::from_closure(kind(), 9, [self, x, y](const Eigen::VectorXd& q) {
    Eigen::Matrix3d xm = unflatten(x.value(q));
    Eigen::Matrix3d ym = unflatten(y.value(q));
    Eigen::VectorXd dy = y.directional(q, self.ambient_velocity(q, x.value(q)));
    Eigen::VectorXd dx = x.directional(q, self.ambient_velocity(q, y.value(q)));
    return (dy - dx + flatten(xm * ym - ym * xm)).eval();
  });
}

Eigen::VectorXd RotationGroupBackend::torsion_tensor(const Eigen::VectorXd&,
                                                     const Eigen::VectorXd& u,
                                                     const Eigen::VectorXd& v) const {
  Eigen::Matrix3d um = unflatten(u), vm = unflatten(v);
  return flatten((-(um * vm - vm * um)).eval());
}

VectorField RotationGroupBackend::torsion_tensor_field(const VectorField& x,
                                                       const VectorField& y) const {
  check_field(x);
  check_field(y);
  if (x.is_polynomial() && y.is_polynomial()) {
    PolyVec comm(9, Poly(9));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Poly acc(9);
        for (int k = 0; k < 3; ++k) {
          acc -= x.polys()[static_cast<std::size_t>(3 * i + k)] *
                 y.polys()[static_cast<std::size_t>(3 * k + j)];
          acc += y.polys()[static_cast<std::size_t>(3 * i + k)] *
                 x.polys()[static_cast<std::size_t>(3 * k + j)];
        }
        comm[static_cast<std::size_t>(3 * i + j)] = std::move(acc);
      }
    return VectorField::from_poly(kind(), std::move(comm));
  }
  auto self = *this;
  return VectorField::from_closure(kind(), 9, [self, x, y](const Eigen::VectorXd& q) {
    return self.torsion_tensor(q, x.value(q), y.value(q));
  });
}

VectorField RotationGroupBackend::projected_constant_field(const Eigen::VectorXd& c) const {
  Eigen::Matrix3d o = unflatten(c);
  return VectorField::from_poly(kind(), const_vec(flatten(0.5 * (o - o.transpose())), 9));
}

Eigen::VectorXd RotationGroupBackend::random_point(std::mt19937_64& rng) const {
  return flatten(random_rotation(rng, 3));
}

Eigen::VectorXd RotationGroupBackend::random_tangent(std::mt19937_64& rng,
                                                     const Eigen::VectorXd&) const {
  return flatten(random_skew(rng, 3));
}

VectorField RotationGroupBackend::left_invariant_field(const Eigen::Vector3d& omega) const {
  return VectorField::from_poly(kind(), const_vec(flatten(hat(omega)), 9));
}

ScalarField RotationGroupBackend::linear_scalar(const Eigen::MatrixXd& c) const {
  Poly acc(9);
  auto q = coords(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      acc += c(i, j) * q[static_cast<std::size_t>(3 * i + j)];
  return ScalarField::from_poly(kind(), std::move(acc));
}

// ---------------------------------------------------------------------------

std::shared_ptr<ConnectionBackend> make_backend(const std::string& name, int m) {
  if (name == "flat") return std::make_shared<FlatBackend>(m);
  if (name == "sphere") return std::make_shared<SphereBackend>(m);
  if (name == "so3") return std::make_shared<RotationGroupBackend>();
  throw std::invalid_argument("unknown backend '" + name + "'");
}

VectorField frozen_field(const ConnectionBackend& backend, const VectorField& f,
                         const Eigen::VectorXd& phat) {
  backend.check_field(f);
  backend.check_point(phat);
  Eigen::VectorXd fp = f.value(phat);
  switch (backend.kind()) {
    case BackendKind::Flat:
      return VectorField::from_poly(backend.kind(), const_vec(fp, backend.ambient_dim()),
                                    f.name() + "^frozen");
    case BackendKind::RotationGroup:
      // transport is the identity on left-trivialized components
      return VectorField::from_poly(backend.kind(), const_vec(fp, 9), f.name() + "^frozen");
    case BackendKind::Sphere: {
      auto b = dynamic_cast<const SphereBackend*>(&backend);
      int m = b->manifold_dim();
      SphereBackend sphere(m);
      Eigen::VectorXd base = phat;
      return VectorField::from_closure(
          backend.kind(), backend.ambient_dim(),
          [sphere, base, fp](const Eigen::VectorXd& q) {
            return sphere.transport(base, sphere.project_point(q), fp);
          },
          f.name() + "^frozen");
    }
  }
  throw std::logic_error("unreachable");
}

Eigen::VectorXd conn_exp(const ConnectionBackend& b, const Eigen::VectorXd& p,
                         const TangentVector& v) {
  if ((v.base - p).norm() > 1e-9)
    throw std::invalid_argument("tangent vector is not based at the given point");
  return b.exp(p, v.components);
}

TangentVector conn_log(const ConnectionBackend& b, const Eigen::VectorXd& phat,
                       const Eigen::VectorXd& p) {
  return TangentVector{phat, b.log(phat, p)};
}

TangentVector parallel_transport(const ConnectionBackend& b, const Eigen::VectorXd& phat,
                                 const Eigen::VectorXd& p, const TangentVector& v) {
  if ((v.base - phat).norm() > 1e-9)
    throw std::invalid_argument("tangent vector is not based at the source point");
  return TangentVector{p, b.transport(phat, p, v.components)};
}

Eigen::VectorXd torsion(const ConnectionBackend& b, const VectorField& x, const VectorField& y,
                        const Eigen::VectorXd& p) {
  return b.torsion_field(x, y).value(p);
}

Eigen::MatrixXd curvature(const ConnectionBackend& b, const VectorField& x,
                          const VectorField& y, const Eigen::VectorXd& p) {
  return b.curvature_matrix(x, y, p);
}

}  // namespace postlie
