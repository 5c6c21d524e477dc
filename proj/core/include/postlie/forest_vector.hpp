#pragma once

#include <map>
#include <utility>
#include <vector>

#include "postlie/rational.hpp"
#include "postlie/tree.hpp"

namespace postlie {

/// Finitely supported map Forest -> Rational: an element of the enveloping
/// algebra of the free post-Lie algebra on colored planar trees. Zero
/// coefficients are never stored; equality is coefficient-wise and exact.
class ForestVector {
 public:
  using Terms = std::map<Forest, Rational>;

  ForestVector() = default;
  static ForestVector zero() { return {}; }
  /// The unit: 1 times the empty forest.
  static ForestVector unit();
  static ForestVector of(const Forest& f, const Rational& c = 1);
  static ForestVector of(const Tree& t, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Rational coefficient(const Forest& f) const;

  /// True when every supported forest is a single tree (an element of the
  /// free post-Lie algebra embedded as primitives).
  bool is_primitive() const;
  int max_grade() const;  // -1 for the zero vector

  void add_term(const Forest& f, const Rational& c);
  ForestVector& operator+=(const ForestVector& o);
  ForestVector& operator-=(const ForestVector& o);
  ForestVector& operator*=(const Rational& c);
  friend ForestVector operator+(ForestVector a, const ForestVector& b) { return a += b; }
  friend ForestVector operator-(ForestVector a, const ForestVector& b) { return a -= b; }
  friend ForestVector operator*(const Rational& c, ForestVector a) { return a *= c; }
  ForestVector operator-() const;

  /// Drops every term of grade > n.
  ForestVector truncated(int n) const;

  bool operator==(const ForestVector& o) const { return terms_ == o.terms_; }

 private:
  Terms terms_;
};

/// Left grafting of a single tree onto a single tree: scion becomes the new
/// leftmost branch of each vertex of target, one term per vertex.
ForestVector graft(const Tree& scion, const Tree& target);

/// Bilinear extension of forest juxtaposition; associative with the empty
/// forest as two-sided unit.
ForestVector concat(const ForestVector& a, const ForestVector& b);

/// The extension of grafting to the whole enveloping algebra:
///   unit acts as identity,
///   a single tree acts as a derivation of the concatenation product,
///   a word acts through the associator rule
///     (x . y) |> z  =  x |> (y |> z) - (x |> y) |> z,
/// and anything without constant term annihilates the unit.
ForestVector triangle(const ForestVector& a, const ForestVector& b);

/// concat(a, b) - concat(b, a).
ForestVector lie_bracket(const ForestVector& a, const ForestVector& b);

/// Deshuffle coproduct of a forest word: all ordered splittings into a
/// subsequence and its complement (2^k pairs, with multiplicity).
std::vector<std::pair<Forest, Forest>> deshuffle(const Forest& f);

/// Grossman-Larson product, evaluated through the deshuffle coproduct:
/// a * b = sum of concat(a_(1), triangle(a_(2), b)).
ForestVector gl_product(const ForestVector& a, const ForestVector& b);

/// Residuals of the two defining axioms of a post-Lie algebra for primitive
/// arguments; both must be identically zero. Non-primitive input is
/// rejected.
std::pair<ForestVector, ForestVector> postlie_axiom_residuals(const ForestVector& x,
                                                              const ForestVector& y,
                                                              const ForestVector& z);

}  // namespace postlie
