#include "postlie/frames.hpp"

#include <cmath>
#include <stdexcept>

#include "postlie/random.hpp"

namespace postlie {

Frame standard_frame(const ConnectionBackend& backend, const Eigen::VectorXd& p) {
  backend.check_point(p);
  const int m = backend.manifold_dim();
  const int n = backend.ambient_dim();
  Frame u;
  u.base = p;
  switch (backend.kind()) {
    case BackendKind::Flat:
      u.iso = Eigen::MatrixXd::Identity(n, m);
      return u;
    case BackendKind::Sphere: {
      // complete p to an orthonormal basis; the tangent part is the frame
      Eigen::MatrixXd basis(n, n);
      basis.col(0) = p;
      int filled = 1;
      for (int k = 0; k < n && filled < n; ++k) {
        Eigen::VectorXd e = Eigen::VectorXd::Unit(n, k);
        for (int j = 0; j < filled; ++j) e -= basis.col(j).dot(e) * basis.col(j);
        if (e.norm() > 1e-6) {
          basis.col(filled++) = e.normalized();
        }
      }
      u.iso = basis.rightCols(m);
      return u;
    }
    case BackendKind::RotationGroup: {
      // left-trivialized components; basis of so(3), orthonormal in the
      // Frobenius metric
      u.iso = Eigen::MatrixXd::Zero(9, 3);
      const double s = 1.0 / std::sqrt(2.0);
      u.iso.col(0) = s * RotationGroupBackend::flatten(
                             RotationGroupBackend::hat(Eigen::Vector3d::UnitX()));
      u.iso.col(1) = s * RotationGroupBackend::flatten(
                             RotationGroupBackend::hat(Eigen::Vector3d::UnitY()));
      u.iso.col(2) = s * RotationGroupBackend::flatten(
                             RotationGroupBackend::hat(Eigen::Vector3d::UnitZ()));
      return u;
    }
  }
  throw std::logic_error("unreachable");
}

Frame frame_transport(const ConnectionBackend& backend, const Frame& u,
                      const Eigen::VectorXd& p) {
  if (!backend.in_transport_domain(u.base, p))
    throw std::domain_error("frame transport outside the transport domain");
  Frame out;
  out.base = p;
  out.iso = Eigen::MatrixXd(u.iso.rows(), u.iso.cols());
  for (int c = 0; c < u.iso.cols(); ++c)
    out.iso.col(c) = backend.transport(u.base, p, u.iso.col(c));
  return out;
}

Frame frame_act(const Frame& u, const Eigen::MatrixXd& q) {
  return Frame{u.base, u.iso * q.inverse()};
}

double ScalarizedTensor::distance(const ScalarizedTensor& o) const {
  if (tensor_kind != o.tensor_kind || data.size() != o.data.size())
    throw std::invalid_argument("comparing scalarizations of different tensors");
  double d = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i)
    d = std::max(d, (data[i] - o.data[i]).cwiseAbs().maxCoeff());
  return d;
}

ScalarizedTensor scalarize(const ConnectionBackend& backend, const TensorFieldRef& tensor,
                           const Frame& u) {
  const int m = backend.manifold_dim();
  ScalarizedTensor out;
  out.tensor_kind = tensor.tensor_kind;
  out.m = m;
  switch (tensor.tensor_kind) {
    case TensorKind::Vector:
      out.data.push_back(u.pull(tensor.field.value(u.base)));
      return out;
    case TensorKind::Covector: {
      // (alpha o u)(e_a) = <w, u e_a>
      out.data.push_back(u.iso.transpose() * tensor.field.value(u.base));
      return out;
    }
    case TensorKind::Torsion: {
      for (int a = 0; a < m; ++a) {
        Eigen::MatrixXd block(m, m);
        for (int b = 0; b < m; ++b) {
          Eigen::VectorXd t =
              backend.torsion_tensor(u.base, u.iso.col(a), u.iso.col(b));
          block.col(b) = u.pull(t);
        }
        out.data.push_back(block);
      }
      return out;
    }
    case TensorKind::Curvature: {
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
          Eigen::MatrixXd r = backend.curvature_endo(u.base, u.iso.col(a), u.iso.col(b));
          Eigen::MatrixXd rbar(m, m);
          for (int c = 0; c < m; ++c) rbar.col(c) = u.pull(r * u.iso.col(c));
          out.data.push_back(rbar);
        }
      return out;
    }
  }
  throw std::invalid_argument("unsupported tensor valence");
}

ScalarizedTensor act(const Eigen::MatrixXd& q, const ScalarizedTensor& t) {
  const int m = t.m;
  Eigen::MatrixXd qinv = q.inverse();
  ScalarizedTensor out;
  out.tensor_kind = t.tensor_kind;
  out.m = m;
  switch (t.tensor_kind) {
    case TensorKind::Vector:
      out.data.push_back(q * t.data[0]);
      return out;
    case TensorKind::Covector:
      out.data.push_back(qinv.transpose() * t.data[0]);
      return out;
    case TensorKind::Torsion: {
      // (q.T)(a,b) = q T(q^{-1}a, q^{-1}b)
      out.data.assign(static_cast<std::size_t>(m), Eigen::MatrixXd::Zero(m, m));
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
          Eigen::VectorXd acc = Eigen::VectorXd::Zero(m);
          for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
              acc += qinv(i, a) * qinv(j, b) * t.data[static_cast<std::size_t>(i)].col(j);
          out.data[static_cast<std::size_t>(a)].col(b) = q * acc;
        }
      return out;
    }
    case TensorKind::Curvature: {
      out.data.assign(static_cast<std::size_t>(m * m), Eigen::MatrixXd::Zero(m, m));
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
          Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(m, m);
          for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
              acc += qinv(i, a) * qinv(j, b) * t.data[static_cast<std::size_t>(i * m + j)];
          out.data[static_cast<std::size_t>(a * m + b)] = q * acc * qinv;
        }
      return out;
    }
  }
  throw std::invalid_argument("unsupported tensor valence");
}

double equivariance_residual(const ConnectionBackend& backend, const TensorFieldRef& tensor,
                             const std::vector<Frame>& frames,
                             const std::vector<Eigen::MatrixXd>& group_elements) {
  double worst = 0.0;
  for (const auto& u : frames) {
    ScalarizedTensor base = scalarize(backend, tensor, u);
    for (const auto& q : group_elements) {
      ScalarizedTensor moved = scalarize(backend, tensor, frame_act(u, q));
      worst = std::max(worst, moved.distance(act(q, base)));
    }
  }
  return worst;
}

int holonomy_span(const ConnectionBackend& backend, const Frame& u0, int samples,
                  std::mt19937_64& rng) {
  const int m = backend.manifold_dim();
  if (samples < m * (m - 1) / 2)
    throw std::invalid_argument("holonomy_span needs at least m(m-1)/2 samples");
  Eigen::MatrixXd rows(samples, m * m);
  for (int s = 0; s < samples; ++s) {
    // transport the frame somewhere inside the domain, then sample R-bar
    Eigen::VectorXd p = backend.random_point(rng);
    for (int tries = 0; tries < 64 && !backend.in_transport_domain(u0.base, p); ++tries)
      p = backend.random_point(rng);
    Frame u = backend.in_transport_domain(u0.base, p) ? frame_transport(backend, u0, p) : u0;
    Eigen::VectorXd a = gaussian_vector(rng, m), b = gaussian_vector(rng, m);
    Eigen::MatrixXd r = backend.curvature_endo(u.base, u.push(a), u.push(b));
    Eigen::MatrixXd rbar(m, m);
    for (int c = 0; c < m; ++c) rbar.col(c) = u.pull(r * u.iso.col(c));
    rows.row(s) = Eigen::Map<Eigen::VectorXd>(rbar.data(), m * m).transpose();
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(rows);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()[i] > 1e-8) ++rank;
  return rank;
}

}  // namespace postlie
