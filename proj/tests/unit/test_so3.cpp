#include <doctest.h>

#include <cmath>

#include "postlie/geometry.hpp"
#include "postlie/random.hpp"

using namespace postlie;
using Eigen::Matrix3d;
using Eigen::MatrixXd;
using Eigen::Vector3d;
using Eigen::VectorXd;

using R = RotationGroupBackend;

TEST_CASE("rotation group exp/log/transport") {
  RotationGroupBackend g;
  std::mt19937_64 rng(103);

  VectorXd id = R::flatten(Matrix3d::Identity());
  CHECK(g.off_manifold_error(id) < 1e-15);

  for (int i = 0; i < 50; ++i) {
    VectorXd p = g.random_point(rng);
    CHECK(g.off_manifold_error(p) < 1e-10);
    VectorXd v = g.random_tangent(rng, p);
    // keep below the cut locus
    Matrix3d om = R::unflatten(v);
    Vector3d w(om(2, 1), om(0, 2), om(1, 0));
    if (w.norm() > M_PI - 0.2) v *= (M_PI - 0.2) / w.norm();

    VectorXd q = g.exp(p, v);
    CHECK(g.off_manifold_error(q) < 1e-10);
    CHECK((g.log(p, q) - v).norm() < 1e-9);
    // flat connection: transport is the identity on trivialized components
    CHECK((g.transport(p, q, v) - v).norm() == 0.0);
  }

  // cut locus rejected
  VectorXd p = g.random_point(rng);
  Matrix3d half_turn = Eigen::AngleAxisd(M_PI, Vector3d::UnitX()).toRotationMatrix();
  VectorXd q = R::flatten((R::unflatten(p) * half_turn).eval());
  CHECK_THROWS_AS(g.log(p, q), std::domain_error);

  // projection returns the nearest rotation
  Matrix3d noisy = R::unflatten(g.random_point(rng)) + 1e-3 * gaussian_matrix(rng, 3, 3);
  VectorXd proj = g.project_point(R::flatten(noisy));
  CHECK(g.off_manifold_error(proj) < 1e-12);
}

TEST_CASE("left-invariant fields are parallel and have the structure torsion") {
  RotationGroupBackend g;
  std::mt19937_64 rng(107);
  Vector3d wa(0.3, -1.1, 0.7), wb(-0.5, 0.2, 0.9);
  VectorField x = g.left_invariant_field(wa);
  VectorField y = g.left_invariant_field(wb);

  VectorXd p = g.random_point(rng);
  CHECK(g.cov_deriv_vec(x, y).value(p).norm() == 0.0);

  // T(x,y) = -[x,y] as matrix commutator of the skew components
  Matrix3d xa = R::hat(wa), xb = R::hat(wb);
  Matrix3d expected = -(xa * xb - xb * xa);
  VectorField t = g.torsion_field(x, y);
  CHECK((t.value(p) - R::flatten(expected)).norm() < 1e-10);
  CHECK((g.torsion_tensor(p, x.value(p), y.value(p)) - R::flatten(expected)).norm() < 1e-14);

  // Jacobi bracket of left-invariant fields is the matrix commutator
  CHECK((g.jacobi_bracket(x, y).value(p) - R::flatten((xa * xb - xb * xa).eval())).norm() <
        1e-14);

  // curvature of the flat connection vanishes
  VectorField z = g.left_invariant_field(Vector3d(1.0, 0.4, -0.2));
  CHECK(g.curvature_apply(x, y, z).value(p).norm() < 1e-12);
  CHECK(g.curvature_matrix(x, y, p).norm() < 1e-12);
}

TEST_CASE("torsion is parallel on the rotation group") {
  RotationGroupBackend g;
  std::mt19937_64 rng(109);
  for (int i = 0; i < 50; ++i) {
    VectorField x = g.left_invariant_field(Vector3d(gaussian(rng), gaussian(rng), gaussian(rng)));
    VectorField y = g.left_invariant_field(Vector3d(gaussian(rng), gaussian(rng), gaussian(rng)));
    VectorField z = g.left_invariant_field(Vector3d(gaussian(rng), gaussian(rng), gaussian(rng)));
    VectorXd p = g.random_point(rng);
    // (nabla_x T)(y,z) = nabla_x(T(y,z)) - T(nabla_x y, z) - T(y, nabla_x z)
    VectorField tyz = g.torsion_field(y, z);
    VectorXd nt = g.cov_deriv_vec(x, tyz).value(p) -
                  g.torsion_tensor(p, g.cov_deriv_vec(x, y).value(p), z.value(p)) -
                  g.torsion_tensor(p, y.value(p), g.cov_deriv_vec(x, z).value(p));
    CHECK(nt.norm() < 1e-12);
  }
}

TEST_CASE("geodesics are one-parameter subgroups") {
  RotationGroupBackend g;
  std::mt19937_64 rng(113);
  VectorXd p = g.random_point(rng);
  Vector3d w(0.4, -0.3, 0.8);
  VectorField x = g.left_invariant_field(w);
  // exp_p(t x(p)) = P expm(t hat(w))
  for (double t : {0.1, 0.7, 2.0}) {
    VectorXd got = g.exp(p, (t * x.value(p)).eval());
    Matrix3d expected =
        R::unflatten(p) * Eigen::AngleAxisd(t * w.norm(), w.normalized()).toRotationMatrix();
    CHECK((got - R::flatten(expected)).norm() < 1e-12);
  }
}
