#include <doctest.h>

#include <cmath>

#include "postlie/frames.hpp"
#include "postlie/random.hpp"

using namespace postlie;
using Eigen::MatrixXd;
using Eigen::VectorXd;

TEST_CASE("standard frames are orthonormal tangent bases") {
  SphereBackend s(3);
  std::mt19937_64 rng(127);
  for (int i = 0; i < 10; ++i) {
    VectorXd p = s.random_point(rng);
    Frame u = standard_frame(s, p);
    CHECK((u.iso.transpose() * u.iso - MatrixXd::Identity(3, 3)).norm() < 1e-12);
    for (int c = 0; c < 3; ++c) CHECK(s.tangency_error(p, u.iso.col(c)) < 1e-12);
    // push/pull are inverse
    VectorXd a = gaussian_vector(rng, 3);
    CHECK((u.pull(u.push(a)) - a).norm() < 1e-12);
  }
}

TEST_CASE("frame transport preserves the Gram matrix") {
  SphereBackend s(2);
  std::mt19937_64 rng(131);
  VectorXd p = s.random_point(rng);
  Frame u = standard_frame(s, p);
  // identity at the base point
  Frame same = frame_transport(s, u, p);
  CHECK((same.iso - u.iso).norm() == 0.0);

  for (int i = 0; i < 30; ++i) {
    VectorXd q = s.random_point(rng);
    if (!s.in_transport_domain(p, q)) continue;
    Frame v = frame_transport(s, u, q);
    CHECK((v.iso.transpose() * v.iso - u.iso.transpose() * u.iso).norm() < 1e-10);
    for (int c = 0; c < 2; ++c) CHECK(s.tangency_error(q, v.iso.col(c)) < 1e-12);
  }

  VectorXd anti = (-p + 0.01 * s.random_tangent(rng, p)).normalized();
  CHECK_THROWS_AS(frame_transport(s, u, anti), std::domain_error);
}

TEST_CASE("scalarization basics") {
  FlatBackend f(3);
  std::mt19937_64 rng(137);
  VectorXd c(3);
  c << 1.0, -2.0, 0.5;
  VectorField cf = f.projected_constant_field(c);
  Frame id = standard_frame(f, f.random_point(rng));
  auto sc = scalarize(f, TensorFieldRef::vector(cf), id);
  CHECK((sc.data[0] - c).norm() < 1e-14);

  // vector x with x(p) = u(a) scalarizes to a
  SphereBackend s(2);
  VectorXd p = s.random_point(rng);
  Frame u = standard_frame(s, p);
  VectorXd a = gaussian_vector(rng, 2);
  VectorField x = s.projected_constant_field(u.push(a));
  // value at p is Pi_p u a = u a (already tangent)
  auto xs = scalarize(s, TensorFieldRef::vector(x), u);
  CHECK((xs.data[0] - a).norm() < 1e-12);
}

TEST_CASE("curvature scalarization is skew and constant along transport") {
  for (int m : {2, 3}) {
    SphereBackend s(m);
    std::mt19937_64 rng(139 + m);
    VectorXd p = s.random_point(rng);
    Frame u = standard_frame(s, p);
    auto rbar = scalarize(s, TensorFieldRef::curvature(), u);
    for (const auto& block : rbar.data) {
      CHECK((block + block.transpose()).norm() < 1e-10);  // values in so(m)
    }
    for (int i = 0; i < 20; ++i) {
      VectorXd q = s.random_point(rng);
      if (!s.in_transport_domain(p, q)) continue;
      Frame v = frame_transport(s, u, q);
      auto rbar_q = scalarize(s, TensorFieldRef::curvature(), v);
      CHECK(rbar.distance(rbar_q) < 1e-9);  // parallel curvature
    }
  }
}

TEST_CASE("torsion scalarization constant along transport on the rotation group") {
  RotationGroupBackend g;
  std::mt19937_64 rng(149);
  VectorXd p = g.random_point(rng);
  Frame u = standard_frame(g, p);
  auto tbar = scalarize(g, TensorFieldRef::torsion(), u);
  for (int i = 0; i < 20; ++i) {
    VectorXd q = g.random_point(rng);
    if (!g.in_transport_domain(p, q)) continue;
    Frame v = frame_transport(g, u, q);
    CHECK(tbar.distance(scalarize(g, TensorFieldRef::torsion(), v)) < 1e-12);
  }
}

TEST_CASE("equivariance of genuine tensors, non-equivariance of a pseudo-quantity") {
  SphereBackend s(2);
  std::mt19937_64 rng(151);

  std::vector<Frame> frames;
  for (int i = 0; i < 5; ++i) frames.push_back(standard_frame(s, s.random_point(rng)));
  std::vector<MatrixXd> qs;
  for (int i = 0; i < 5; ++i) qs.push_back(random_rotation(rng, 2));

  VectorField x = s.projected_affine_field(gaussian_matrix(rng, 3, 3), gaussian_vector(rng, 3));
  CHECK(equivariance_residual(s, TensorFieldRef::vector(x), frames, qs) < 1e-9);
  VectorField w = s.projected_affine_field(gaussian_matrix(rng, 3, 3), gaussian_vector(rng, 3));
  CHECK(equivariance_residual(s, TensorFieldRef::covector(w), frames, qs) < 1e-9);
  CHECK(equivariance_residual(s, TensorFieldRef::curvature(), frames, qs) < 1e-9);
  CHECK(equivariance_residual(s, TensorFieldRef::torsion(), frames, qs) < 1e-9);

  // flat backend, identity group element, constant field: exactly zero
  FlatBackend f(3);
  std::vector<Frame> fframes = {standard_frame(f, f.random_point(rng))};
  std::vector<MatrixXd> fid = {MatrixXd::Identity(3, 3)};
  VectorField cf = f.projected_constant_field(gaussian_vector(rng, 3));
  CHECK(equivariance_residual(f, TensorFieldRef::vector(cf), fframes, fid) == 0.0);

  // negative control: raw ambient components ignore the frame entirely
  double worst = 0.0;
  for (const auto& u : frames) {
    Eigen::Vector2d raw = x.value(u.base).head<2>();
    for (const auto& q : qs) {
      Eigen::Vector2d raw_moved = x.value(frame_act(u, q).base).head<2>();
      worst = std::max(worst, (raw_moved - q * raw).norm());
    }
  }
  CHECK(worst > 1e-3);
}

TEST_CASE("horizontal derivative of a scalarized vector equals the scalarized covariant derivative") {
  SphereBackend s(2);
  std::mt19937_64 rng(157);
  VectorField x = s.projected_affine_field(gaussian_matrix(rng, 3, 3), gaussian_vector(rng, 3));
  VectorField y = s.projected_affine_field(gaussian_matrix(rng, 3, 3), gaussian_vector(rng, 3));
  const double h = 1e-5;
  for (int i = 0; i < 10; ++i) {
    VectorXd p = s.random_point(rng);
    Frame u = standard_frame(s, p);
    VectorXd dir = x.value(p);
    auto ybar_along = [&](double t) {
      VectorXd q = s.exp(p, (t * dir).eval());
      Frame ut = frame_transport(s, u, q);
      return scalarize(s, TensorFieldRef::vector(y), ut).data[0];
    };
    VectorXd deriv = (ybar_along(h) - ybar_along(-h)) / (2 * h);
    VectorXd expected = scalarize(s, TensorFieldRef::vector(s.cov_deriv_vec(x, y)), u).data[0];
    CHECK((deriv - expected).norm() < 1e-6);
  }
}

TEST_CASE("holonomy rank: Ambrose-Singer dimension") {
  std::mt19937_64 rng(163);

  SphereBackend s2(2);
  Frame u2 = standard_frame(s2, s2.random_point(rng));
  CHECK(holonomy_span(s2, u2, 40, rng) == 1);

  SphereBackend s3(3);
  Frame u3 = standard_frame(s3, s3.random_point(rng));
  CHECK(holonomy_span(s3, u3, 60, rng) == 3);

  FlatBackend f(3);
  Frame uf = standard_frame(f, f.random_point(rng));
  CHECK(holonomy_span(f, uf, 30, rng) == 0);

  RotationGroupBackend g;
  Frame ug = standard_frame(g, g.random_point(rng));
  CHECK(holonomy_span(g, ug, 30, rng) == 0);

  CHECK_THROWS_AS(holonomy_span(s3, u3, 2, rng), std::invalid_argument);
}
