#include "postlie/extended.hpp"

#include <algorithm>

namespace postlie {

namespace {

VectorField zero_vec(const ConnectionBackend& b) {
  return VectorField::from_poly(b.kind(),
                                PolyVec(static_cast<std::size_t>(b.ambient_dim()),
                                        Poly(b.ambient_dim())),
                                "0");
}

}  // namespace

ExtendedField ExtendedField::of(const ConnectionBackend& b, VectorField x) {
  b.check_field(x);
  return ExtendedField{std::move(x), EndoField::zero(b.kind(), b.ambient_dim())};
}

ExtendedField ExtendedField::of(const ConnectionBackend& b, EndoField e) {
  b.check_field(e);
  return ExtendedField{zero_vec(b), std::move(e)};
}

ExtendedField ExtendedField::of(const ConnectionBackend& b, VectorField x, EndoField e) {
  b.check_field(x);
  b.check_field(e);
  return ExtendedField{std::move(x), std::move(e)};
}

ExtendedField ExtendedField::zero(const ConnectionBackend& b) {
  return ExtendedField{zero_vec(b), EndoField::zero(b.kind(), b.ambient_dim())};
}

ExtendedField extended_bracket(const ConnectionBackend& b, const ExtendedField& a,
                               const ExtendedField& c) {
  const VectorField& x = a.vec;
  const VectorField& y = c.vec;
  const EndoField& e1 = a.endo;
  const EndoField& e2 = c.endo;
  VectorField vec_part =
      (-1.0 * b.torsion_tensor_field(x, y)) - apply_endo(e1, y) + apply_endo(e2, x);
  EndoField endo_part = b.curvature_endo_field(x, y) - commutator(e1, e2);
  return ExtendedField{std::move(vec_part), std::move(endo_part)};
}

ExtendedField extended_triangle(const ConnectionBackend& b, const ExtendedField& a,
                                const ExtendedField& c) {
  const VectorField& x = a.vec;
  const VectorField& y = c.vec;
  const EndoField& e1 = a.endo;
  const EndoField& e2 = c.endo;
  VectorField vec_part = b.cov_deriv_vec(x, y) + apply_endo(e1, y);
  EndoField endo_part = b.cov_deriv_endo(x, e2) + commutator(e1, e2);
  return ExtendedField{std::move(vec_part), std::move(endo_part)};
}

double PostLieResiduals::max() const {
  return std::max({jacobi, derivation, associator});
}

double extended_norm_at(const ExtendedField& a, const Eigen::VectorXd& p) {
  return std::max(a.vec.value(p).norm(), a.endo.value(p).norm());
}

PostLieResiduals extended_axiom_residuals(const ConnectionBackend& b, const ExtendedField& x,
                                          const ExtendedField& y, const ExtendedField& z,
                                          const Eigen::VectorXd& p) {
  auto br = [&](const ExtendedField& u, const ExtendedField& v) {
    return extended_bracket(b, u, v);
  };
  auto tr = [&](const ExtendedField& u, const ExtendedField& v) {
    return extended_triangle(b, u, v);
  };
  auto minus = [&](const ExtendedField& u, const ExtendedField& v) {
    return ExtendedField{u.vec - v.vec, u.endo - v.endo};
  };
  auto plus = [&](const ExtendedField& u, const ExtendedField& v) {
    return ExtendedField{u.vec + v.vec, u.endo + v.endo};
  };
  auto assoc = [&](const ExtendedField& u, const ExtendedField& v, const ExtendedField& w) {
    return minus(tr(u, tr(v, w)), tr(tr(u, v), w));
  };

  PostLieResiduals out;
  ExtendedField jac = plus(plus(br(br(x, y), z), br(br(y, z), x)), br(br(z, x), y));
  out.jacobi = extended_norm_at(jac, p);

  ExtendedField der = minus(minus(tr(x, br(y, z)), br(tr(x, y), z)), br(y, tr(x, z)));
  out.derivation = extended_norm_at(der, p);

  ExtendedField asc = plus(minus(tr(br(x, y), z), assoc(x, y, z)), assoc(y, x, z));
  out.associator = extended_norm_at(asc, p);
  return out;
}

}  // namespace postlie
