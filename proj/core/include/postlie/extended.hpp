#pragma once

#include "postlie/geometry.hpp"

namespace postlie {

/// An element of the extended space of vector fields plus holonomy
/// endomorphism fields. Either part may be identically zero.
struct ExtendedField {
  VectorField vec;
  EndoField endo;

  static ExtendedField of(const ConnectionBackend& b, VectorField x);
  static ExtendedField of(const ConnectionBackend& b, EndoField e);
  static ExtendedField of(const ConnectionBackend& b, VectorField x, EndoField e);
  static ExtendedField zero(const ConnectionBackend& b);
};

/// The bracket on extended fields:
///   [(x,E1),(y,E2)] = (-T(x,y) - E1 y + E2 x,  R(x,y) - E1 E2 + E2 E1).
ExtendedField extended_bracket(const ConnectionBackend& b, const ExtendedField& a,
                               const ExtendedField& c);

/// The triangle product on extended fields:
///   (x,E1) |> (y,E2) = (cov_x y + E1 y,  cov_x E2 + E1 E2 - E2 E1).
ExtendedField extended_triangle(const ConnectionBackend& b, const ExtendedField& a,
                                const ExtendedField& c);

struct PostLieResiduals {
  double jacobi = 0.0;
  double derivation = 0.0;
  double associator = 0.0;

  double max() const;
};

/// Pointwise residual norms of the three post-Lie laws for the extended
/// bracket and triangle: the Jacobi identity, the derivation law
/// a |> [b,c] = [a|>b, c] + [b, a|>c], and
/// [a,b] |> c = assoc(a,b,c) - assoc(b,a,c). Residuals are reported even
/// when large.
PostLieResiduals extended_axiom_residuals(const ConnectionBackend& b, const ExtendedField& x,
                                          const ExtendedField& y, const ExtendedField& z,
                                          const Eigen::VectorXd& p);

/// max(|vector part|, Frobenius norm of endo part) at p.
double extended_norm_at(const ExtendedField& a, const Eigen::VectorXd& p);

}  // namespace postlie
