#pragma once

#include <Eigen/Dense>

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "postlie/poly.hpp"

namespace postlie {

enum class BackendKind { Flat, Sphere, RotationGroup };

// Scalar, vector and endomorphism fields as ambient maps. Preset fields are
// polynomial and differentiate exactly; derived non-polynomial fields
// (frozen fields, user closures) fall back to a 4th-order central stencil,
// wide enough that one nested derivative level stays well under the axiom
// tolerances.

namespace fd {
/// 4th-order central difference step for internal derivative fallbacks.
inline constexpr double kStep = 1e-3;

Eigen::VectorXd directional(const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& f,
                            const Eigen::VectorXd& q, const Eigen::VectorXd& u,
                            double h = kStep);
double directional(const std::function<double(const Eigen::VectorXd&)>& f,
                   const Eigen::VectorXd& q, const Eigen::VectorXd& u, double h = kStep);
Eigen::MatrixXd directional(const std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>& f,
                            const Eigen::VectorXd& q, const Eigen::VectorXd& u,
                            double h = kStep);
}  // namespace fd

class ScalarField {
 public:
  ScalarField() = default;
  static ScalarField from_poly(BackendKind kind, Poly p);
  static ScalarField from_closure(BackendKind kind, int ambient_dim,
                                  std::function<double(const Eigen::VectorXd&)> value);

  double value(const Eigen::VectorXd& q) const;
  Eigen::VectorXd gradient(const Eigen::VectorXd& q) const;
  double directional(const Eigen::VectorXd& q, const Eigen::VectorXd& u) const;

  bool is_polynomial() const { return poly_.has_value(); }
  const Poly& poly() const { return *poly_; }
  BackendKind kind() const { return kind_; }
  int ambient_dim() const { return dim_; }

 private:
  BackendKind kind_ = BackendKind::Flat;
  int dim_ = 0;
  std::optional<Poly> poly_;
  std::optional<PolyVec> grad_poly_;
  std::function<double(const Eigen::VectorXd&)> value_fn_;
};

class VectorField {
 public:
  VectorField() = default;
  static VectorField from_poly(BackendKind kind, PolyVec components, std::string name = "");
  static VectorField from_closure(BackendKind kind, int ambient_dim,
                                  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> value,
                                  std::string name = "");

  Eigen::VectorXd value(const Eigen::VectorXd& q) const;
  /// d value / d q, ambient Jacobian (exact for polynomial fields).
  Eigen::MatrixXd jacobian(const Eigen::VectorXd& q) const;
  /// D value(q)[u], one directional derivative.
  Eigen::VectorXd directional(const Eigen::VectorXd& q, const Eigen::VectorXd& u) const;

  bool is_polynomial() const { return poly_.has_value(); }
  const PolyVec& polys() const { return *poly_; }
  BackendKind kind() const { return kind_; }
  int ambient_dim() const { return dim_; }
  const std::string& name() const { return name_; }

  VectorField& operator+=(const VectorField& o);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(const VectorField& a, const VectorField& b);
  friend VectorField operator*(double c, const VectorField& a);

 private:
  BackendKind kind_ = BackendKind::Flat;
  int dim_ = 0;
  std::string name_;
  std::optional<PolyVec> poly_;
  std::optional<PolyMat> jac_poly_;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> value_fn_;
};

class EndoField {
 public:
  EndoField() = default;
  static EndoField from_poly(BackendKind kind, PolyMat components, std::string name = "");
  static EndoField from_closure(BackendKind kind, int ambient_dim,
                                std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> value,
                                std::string name = "");
  static EndoField zero(BackendKind kind, int ambient_dim);

  Eigen::MatrixXd value(const Eigen::VectorXd& q) const;
  /// D E(q)[u], entry-wise directional derivative.
  Eigen::MatrixXd directional(const Eigen::VectorXd& q, const Eigen::VectorXd& u) const;

  bool is_polynomial() const { return poly_.has_value(); }
  const PolyMat& polys() const { return *poly_; }
  bool is_zero_poly() const;
  BackendKind kind() const { return kind_; }
  int ambient_dim() const { return dim_; }
  const std::string& name() const { return name_; }

  EndoField& operator+=(const EndoField& o);
  friend EndoField operator+(EndoField a, const EndoField& b) { return a += b; }
  friend EndoField operator-(const EndoField& a, const EndoField& b);
  friend EndoField operator*(double c, const EndoField& a);

 private:
  BackendKind kind_ = BackendKind::Flat;
  int dim_ = 0;
  std::string name_;
  std::optional<PolyMat> poly_;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> value_fn_;
};

/// E(q) y(q) as a vector field.
VectorField apply_endo(const EndoField& e, const VectorField& y);
/// E1 E2 as an endomorphism field (composition).
EndoField compose(const EndoField& a, const EndoField& b);
/// E1 E2 - E2 E1.
EndoField commutator(const EndoField& a, const EndoField& b);
/// x(q) y(q)^T.
EndoField outer_field(const VectorField& x, const VectorField& y);
/// directional derivative of a scalar field along a vector field, as a field
ScalarField lie_derivative(const VectorField& x, const ScalarField& phi);

void check_same_space(const VectorField& a, const VectorField& b);
void check_same_space(const VectorField& a, const EndoField& b);
void check_same_space(const EndoField& a, const EndoField& b);

}  // namespace postlie
