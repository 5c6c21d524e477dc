#pragma once

#include <Eigen/Dense>

#include <memory>
#include <random>
#include <string>

#include "postlie/fields.hpp"

namespace postlie {

/// Tangent vector with its base point attached. For the rotation-group
/// backend the components are the flattened skew matrix of the left
/// trivialization; elsewhere they are ambient coordinates.
struct TangentVector {
  Eigen::VectorXd base;
  Eigen::VectorXd components;
};

/// A manifold with an affine connection whose torsion and curvature are
/// parallel. Three realizations: flat space (T = R = 0), the unit sphere
/// with the Levi-Civita connection (T = 0, parallel R), and SO(3) with the
/// left-invariant connection making left-invariant fields parallel
/// (R = 0, parallel T).
class ConnectionBackend {
 public:
  virtual ~ConnectionBackend() = default;

  virtual BackendKind kind() const = 0;
  virtual std::string name() const = 0;
  virtual int manifold_dim() const = 0;
  virtual int ambient_dim() const = 0;

  virtual double off_manifold_error(const Eigen::VectorXd& q) const = 0;
  virtual Eigen::VectorXd project_point(const Eigen::VectorXd& q) const = 0;
  virtual Eigen::VectorXd project_tangent(const Eigen::VectorXd& p,
                                          const Eigen::VectorXd& v) const = 0;
  virtual double tangency_error(const Eigen::VectorXd& p, const Eigen::VectorXd& v) const = 0;

  /// Geodesic endpoint exp_p(v).
  virtual Eigen::VectorXd exp(const Eigen::VectorXd& p, const Eigen::VectorXd& v) const = 0;
  /// Inverse of exp at phat; throws std::domain_error outside the domain.
  virtual Eigen::VectorXd log(const Eigen::VectorXd& phat, const Eigen::VectorXd& p) const = 0;
  /// Parallel transport of v from phat to p along the unique geodesic.
  virtual Eigen::VectorXd transport(const Eigen::VectorXd& phat, const Eigen::VectorXd& p,
                                    const Eigen::VectorXd& v) const = 0;
  virtual bool in_transport_domain(const Eigen::VectorXd& phat,
                                   const Eigen::VectorXd& p) const = 0;

  /// Ambient direction of motion when moving through p with tangent
  /// components v (identity except under left trivialization).
  virtual Eigen::VectorXd ambient_velocity(const Eigen::VectorXd& p,
                                           const Eigen::VectorXd& v) const {
    (void)p;
    return v;
  }

  virtual VectorField cov_deriv_vec(const VectorField& x, const VectorField& y) const = 0;
  virtual EndoField cov_deriv_endo(const VectorField& x, const EndoField& e) const = 0;
  virtual VectorField jacobi_bracket(const VectorField& x, const VectorField& y) const = 0;

  /// T(x,y) = cov(x,y) - cov(y,x) - [x,y]_J, from derivatives.
  VectorField torsion_field(const VectorField& x, const VectorField& y) const;
  /// R(x,y)z = cov_x cov_y z - cov_y cov_x z - cov_{[x,y]_J} z, from
  /// derivatives (one nested level).
  VectorField curvature_apply(const VectorField& x, const VectorField& y,
                              const VectorField& z) const;
  /// The endomorphism R(x,y)|_p assembled column-wise from curvature_apply.
  Eigen::MatrixXd curvature_matrix(const VectorField& x, const VectorField& y,
                                   const Eigen::VectorXd& p) const;

  /// Closed-form tensors (the derivative-based routes above validate these).
  virtual Eigen::VectorXd torsion_tensor(const Eigen::VectorXd& p, const Eigen::VectorXd& u,
                                         const Eigen::VectorXd& v) const = 0;
  virtual Eigen::MatrixXd curvature_endo(const Eigen::VectorXd& p, const Eigen::VectorXd& u,
                                         const Eigen::VectorXd& v) const = 0;
  /// T(x,y) as a vector field with exact derivatives.
  virtual VectorField torsion_tensor_field(const VectorField& x, const VectorField& y) const = 0;
  /// R(x,y) as an endomorphism field with exact derivatives.
  virtual EndoField curvature_endo_field(const VectorField& x, const VectorField& y) const = 0;

  /// The constant ambient vector compressed to the tangent spaces.
  virtual VectorField projected_constant_field(const Eigen::VectorXd& c) const = 0;

  virtual Eigen::VectorXd random_point(std::mt19937_64& rng) const = 0;
  virtual Eigen::VectorXd random_tangent(std::mt19937_64& rng, const Eigen::VectorXd& p) const = 0;

  void check_field(const VectorField& f) const;
  void check_field(const EndoField& f) const;
  void check_point(const Eigen::VectorXd& p) const;
};

class FlatBackend final : public ConnectionBackend {
 public:
  explicit FlatBackend(int m) : m_(m) {}

  BackendKind kind() const override { return BackendKind::Flat; }
  std::string name() const override { return "flat"; }
  int manifold_dim() const override { return m_; }
  int ambient_dim() const override { return m_; }

  double off_manifold_error(const Eigen::VectorXd&) const override { return 0.0; }
  Eigen::VectorXd project_point(const Eigen::VectorXd& q) const override { return q; }
  Eigen::VectorXd project_tangent(const Eigen::VectorXd&, const Eigen::VectorXd& v) const override {
    return v;
  }
  double tangency_error(const Eigen::VectorXd&, const Eigen::VectorXd&) const override {
    return 0.0;
  }

  Eigen::VectorXd exp(const Eigen::VectorXd& p, const Eigen::VectorXd& v) const override {
    return p + v;
  }
  Eigen::VectorXd log(const Eigen::VectorXd& phat, const Eigen::VectorXd& p) const override {
    return p - phat;
  }
  Eigen::VectorXd transport(const Eigen::VectorXd&, const Eigen::VectorXd&,
                            const Eigen::VectorXd& v) const override {
    return v;
  }
  bool in_transport_domain(const Eigen::VectorXd&, const Eigen::VectorXd&) const override {
    return true;
  }

  VectorField cov_deriv_vec(const VectorField& x, const VectorField& y) const override;
  EndoField cov_deriv_endo(const VectorField& x, const EndoField& e) const override;
  VectorField jacobi_bracket(const VectorField& x, const VectorField& y) const override;

  Eigen::VectorXd torsion_tensor(const Eigen::VectorXd&, const Eigen::VectorXd&,
                                 const Eigen::VectorXd&) const override {
    return Eigen::VectorXd::Zero(m_);
  }
  Eigen::MatrixXd curvature_endo(const Eigen::VectorXd&, const Eigen::VectorXd&,
                                 const Eigen::VectorXd&) const override {
    return Eigen::MatrixXd::Zero(m_, m_);
  }
  VectorField torsion_tensor_field(const VectorField& x, const VectorField& y) const override;
  EndoField curvature_endo_field(const VectorField&, const VectorField&) const override {
    return EndoField::zero(BackendKind::Flat, m_);
  }

  VectorField projected_constant_field(const Eigen::VectorXd& c) const override;
  Eigen::VectorXd random_point(std::mt19937_64& rng) const override;
  Eigen::VectorXd random_tangent(std::mt19937_64& rng, const Eigen::VectorXd& p) const override;

  /// y(q) = A q + c with exact Jacobian A.
  VectorField affine_field(const Eigen::MatrixXd& a, const Eigen::VectorXd& c) const;
  EndoField constant_endo(const Eigen::MatrixXd& s) const;
  ScalarField linear_scalar(const Eigen::VectorXd& c) const;
  ScalarField quadratic_scalar(const Eigen::MatrixXd& q) const;

 private:
  int m_;
};

class SphereBackend final : public ConnectionBackend {
 public:
  explicit SphereBackend(int m);

  BackendKind kind() const override { return BackendKind::Sphere; }
  std::string name() const override { return "sphere"; }
  int manifold_dim() const override { return m_; }
  int ambient_dim() const override { return m_ + 1; }

  double off_manifold_error(const Eigen::VectorXd& q) const override;
  Eigen::VectorXd project_point(const Eigen::VectorXd& q) const override;
  Eigen::VectorXd project_tangent(const Eigen::VectorXd& p,
                                  const Eigen::VectorXd& v) const override;
  double tangency_error(const Eigen::VectorXd& p, const Eigen::VectorXd& v) const override;

  Eigen::VectorXd exp(const Eigen::VectorXd& p, const Eigen::VectorXd& v) const override;
  Eigen::VectorXd log(const Eigen::VectorXd& phat, const Eigen::VectorXd& p) const override;
  Eigen::VectorXd transport(const Eigen::VectorXd& phat, const Eigen::VectorXd& p,
                            const Eigen::VectorXd& v) const override;
  bool in_transport_domain(const Eigen::VectorXd& phat,
                           const Eigen::VectorXd& p) const override;

  VectorField cov_deriv_vec(const VectorField& x, const VectorField& y) const override;
  EndoField cov_deriv_endo(const VectorField& x, const EndoField& e) const override;
  VectorField jacobi_bracket(const VectorField& x, const VectorField& y) const override;

  Eigen::VectorXd torsion_tensor(const Eigen::VectorXd&, const Eigen::VectorXd&,
                                 const Eigen::VectorXd&) const override {
    return Eigen::VectorXd::Zero(m_ + 1);
  }
  /// R(u,v) = u v^T - v u^T on the unit sphere.
  Eigen::MatrixXd curvature_endo(const Eigen::VectorXd& p, const Eigen::VectorXd& u,
                                 const Eigen::VectorXd& v) const override;
  VectorField torsion_tensor_field(const VectorField& x, const VectorField& y) const override;
  EndoField curvature_endo_field(const VectorField& x, const VectorField& y) const override;

  VectorField projected_constant_field(const Eigen::VectorXd& c) const override;
  Eigen::VectorXd random_point(std::mt19937_64& rng) const override;
  Eigen::VectorXd random_tangent(std::mt19937_64& rng, const Eigen::VectorXd& p) const override;

  /// f(q) = (I - q q^T)(A q + c), polynomial with exact derivatives.
  VectorField projected_affine_field(const Eigen::MatrixXd& a, const Eigen::VectorXd& c) const;
  /// The Killing field q -> A q for skew A.
  VectorField rotation_field(const Eigen::MatrixXd& a_skew) const;
  /// E(q) = (I - q q^T) S (I - q q^T); lands in the holonomy algebra when S
  /// is skew.
  EndoField compressed_endo(const Eigen::MatrixXd& s) const;
  ScalarField linear_scalar(const Eigen::VectorXd& c) const;
  ScalarField quadratic_scalar(const Eigen::MatrixXd& q) const;

  const PolyMat& tangent_projector() const { return proj_; }

 private:
  int m_;
  PolyMat proj_;  // I - q q^T
};

/// SO(3) with the connection that makes left-invariant fields parallel.
/// Points are row-major flattened rotation matrices; tangent components are
/// flattened skew matrices under left trivialization.
class RotationGroupBackend final : public ConnectionBackend {
 public:
  RotationGroupBackend();

  BackendKind kind() const override { return BackendKind::RotationGroup; }
  std::string name() const override { return "so3"; }
  int manifold_dim() const override { return 3; }
  int ambient_dim() const override { return 9; }

  double off_manifold_error(const Eigen::VectorXd& q) const override;
  Eigen::VectorXd project_point(const Eigen::VectorXd& q) const override;
  Eigen::VectorXd project_tangent(const Eigen::VectorXd& p,
                                  const Eigen::VectorXd& v) const override;
  double tangency_error(const Eigen::VectorXd& p, const Eigen::VectorXd& v) const override;

  Eigen::VectorXd exp(const Eigen::VectorXd& p, const Eigen::VectorXd& v) const override;
  Eigen::VectorXd log(const Eigen::VectorXd& phat, const Eigen::VectorXd& p) const override;
  Eigen::VectorXd transport(const Eigen::VectorXd& phat, const Eigen::VectorXd& p,
                            const Eigen::VectorXd& v) const override;
  bool in_transport_domain(const Eigen::VectorXd& phat,
                           const Eigen::VectorXd& p) const override;

  Eigen::VectorXd ambient_velocity(const Eigen::VectorXd& p,
                                   const Eigen::VectorXd& v) const override;

  VectorField cov_deriv_vec(const VectorField& x, const VectorField& y) const override;
  EndoField cov_deriv_endo(const VectorField& x, const EndoField& e) const override;
  VectorField jacobi_bracket(const VectorField& x, const VectorField& y) const override;

  /// T(u,v) = -[u, v] (matrix commutator of the skew components).
  Eigen::VectorXd torsion_tensor(const Eigen::VectorXd& p, const Eigen::VectorXd& u,
                                 const Eigen::VectorXd& v) const override;
  Eigen::MatrixXd curvature_endo(const Eigen::VectorXd&, const Eigen::VectorXd&,
                                 const Eigen::VectorXd&) const override {
    return Eigen::MatrixXd::Zero(9, 9);
  }
  VectorField torsion_tensor_field(const VectorField& x, const VectorField& y) const override;
  EndoField curvature_endo_field(const VectorField&, const VectorField&) const override {
    return EndoField::zero(BackendKind::RotationGroup, 9);
  }

  VectorField projected_constant_field(const Eigen::VectorXd& c) const override;
  Eigen::VectorXd random_point(std::mt19937_64& rng) const override;
  Eigen::VectorXd random_tangent(std::mt19937_64& rng, const Eigen::VectorXd& p) const override;

  /// Left-invariant field with constant skew coefficient matrix.
  VectorField left_invariant_field(const Eigen::Vector3d& omega) const;
  /// phi(P) = <C, P>_F, linear in the matrix entries.
  ScalarField linear_scalar(const Eigen::MatrixXd& c) const;

  static Eigen::Matrix3d unflatten(const Eigen::VectorXd& v);
  static Eigen::VectorXd flatten(const Eigen::Matrix3d& m);
  static Eigen::Matrix3d hat(const Eigen::Vector3d& w);

 private:
  PolyVec velocity_polys(const PolyVec& x) const;  // flatten(mat(q) * mat(x(q)))
};

std::shared_ptr<ConnectionBackend> make_backend(const std::string& name, int m);

/// The frozen field of f at phat: p -> P_{phat,p} f(phat), defined on the
/// transport domain of phat. Evaluation normalizes its argument onto the
/// manifold first, so the extension is constant along rays.
VectorField frozen_field(const ConnectionBackend& backend, const VectorField& f,
                         const Eigen::VectorXd& phat);

// Spec-surface wrappers with base-point checking.
Eigen::VectorXd conn_exp(const ConnectionBackend& b, const Eigen::VectorXd& p,
                         const TangentVector& v);
TangentVector conn_log(const ConnectionBackend& b, const Eigen::VectorXd& phat,
                       const Eigen::VectorXd& p);
TangentVector parallel_transport(const ConnectionBackend& b, const Eigen::VectorXd& phat,
                                 const Eigen::VectorXd& p, const TangentVector& v);
/// T(x,y)|_p from the derivative-based torsion field.
Eigen::VectorXd torsion(const ConnectionBackend& b, const VectorField& x, const VectorField& y,
                        const Eigen::VectorXd& p);
/// R(x,y)|_p from the derivative-based route.
Eigen::MatrixXd curvature(const ConnectionBackend& b, const VectorField& x,
                          const VectorField& y, const Eigen::VectorXd& p);

}  // namespace postlie
