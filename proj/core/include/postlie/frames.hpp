#pragma once

#include <Eigen/Dense>

#include <random>
#include <vector>

#include "postlie/geometry.hpp"

namespace postlie {

/// A linear isomorphism R^m -> T_pM, stored as the ambient matrix whose
/// columns are the images of the standard basis. Frames on the sphere's
/// holonomy bundle keep orthonormal columns under transport.
struct Frame {
  Eigen::VectorXd base;
  Eigen::MatrixXd iso;  // ambient_dim x m

  Eigen::VectorXd push(const Eigen::VectorXd& a) const { return iso * a; }
  /// u^{-1} v for v tangent at the base.
  Eigen::VectorXd pull(const Eigen::VectorXd& v) const {
    return iso.colPivHouseholderQr().solve(v);
  }
};

/// Synthesize a frame at p: orthonormal tangent basis on the sphere,
/// standard basis on flat space, the left-trivialized so(3) basis on the
/// rotation group.
Frame standard_frame(const ConnectionBackend& backend, const Eigen::VectorXd& p);

/// Column-wise parallel transport of the frame along the geodesic to p.
Frame frame_transport(const ConnectionBackend& backend, const Frame& u,
                      const Eigen::VectorXd& p);

/// Frame change under the left action q.u = u o q^{-1}.
Frame frame_act(const Frame& u, const Eigen::MatrixXd& q);

enum class TensorKind { Vector, Covector, Torsion, Curvature };

/// The tensors this artifact scalarizes: vector fields, covector fields
/// (represented by their metric-dual vector w, alpha = <w, .>), and the
/// backend's torsion and curvature tensors.
struct TensorFieldRef {
  TensorKind tensor_kind;
  VectorField field;  // used by Vector and Covector

  static TensorFieldRef vector(VectorField x) { return {TensorKind::Vector, std::move(x)}; }
  static TensorFieldRef covector(VectorField w) { return {TensorKind::Covector, std::move(w)}; }
  static TensorFieldRef torsion() { return {TensorKind::Torsion, {}}; }
  static TensorFieldRef curvature() { return {TensorKind::Curvature, {}}; }
};

/// Frame components of a tensor. Layout by kind:
///   Vector    (1,0): data[0] is m x 1
///   Covector  (0,1): data[0] is m x 1 (components of alpha o u)
///   Torsion   (2,1): data[a] is m x m, column b = components of T(u e_a, u e_b)
///   Curvature (3,1): data[a*m+b] is the m x m matrix of u^{-1} R(u e_a, u e_b) u
struct ScalarizedTensor {
  TensorKind tensor_kind;
  int m = 0;
  std::vector<Eigen::MatrixXd> data;

  double distance(const ScalarizedTensor& o) const;
};

ScalarizedTensor scalarize(const ConnectionBackend& backend, const TensorFieldRef& tensor,
                           const Frame& u);

/// Standard tensor action of the structure group on frame components.
ScalarizedTensor act(const Eigen::MatrixXd& q, const ScalarizedTensor& t);

/// max over frames and group elements of |scalarize(q.u) - q.scalarize(u)|.
double equivariance_residual(const ConnectionBackend& backend, const TensorFieldRef& tensor,
                             const std::vector<Frame>& frames,
                             const std::vector<Eigen::MatrixXd>& group_elements);

/// Numerical dimension (singular values > 1e-8) of the span of sampled
/// curvature endomorphisms u^{-1} R(u a, u b) u over transported frames.
/// Requires samples >= m(m-1)/2.
int holonomy_span(const ConnectionBackend& backend, const Frame& u0, int samples,
                  std::mt19937_64& rng);

}  // namespace postlie
