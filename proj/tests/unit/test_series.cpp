#include <doctest.h>

#include "postlie/series.hpp"
#include "postlie/tree.hpp"

using namespace postlie;

namespace {

const Alphabet kA({"a"});

Forest fst(const std::string& code) { return parse_forest(code, kA); }

}  // namespace

TEST_CASE("pairing is the Kronecker pairing with explicit range errors") {
  Forest w = fst("a[a[]]");
  auto d = TruncatedSeries::delta(w, 3);
  CHECK(pairing(d, w) == 1);
  CHECK(pairing(d, fst("a[]a[]")) == 0);
  CHECK_THROWS_AS(pairing(d, fst("a[]a[]a[]a[]")), std::out_of_range);
  CHECK_THROWS_AS(TruncatedSeries::delta(fst("a[]a[]a[]a[]"), 3), std::out_of_range);
}

TEST_CASE("exponentials at low order") {
  auto alpha = TruncatedSeries::delta(fst("a[]"), 2);

  auto es = exp_star(alpha, 2);
  CHECK(pairing(es, fst("")) == 1);
  CHECK(pairing(es, fst("a[]")) == 1);
  CHECK(pairing(es, fst("a[]a[]")) == Rational(1, 2));
  CHECK(pairing(es, fst("a[a[]]")) == Rational(1, 2));

  auto ed = exp_dot(alpha, 2);
  CHECK(pairing(ed, fst("")) == 1);
  CHECK(pairing(ed, fst("a[]")) == 1);
  CHECK(pairing(ed, fst("a[]a[]")) == Rational(1, 2));
  CHECK(pairing(ed, fst("a[a[]]")) == 0);

  auto ez = exp_star(TruncatedSeries::zero(4), 4);
  CHECK(ez.coefficients() == ForestVector::unit());

  auto bad = TruncatedSeries(2, ForestVector::unit());
  CHECK_THROWS_AS(exp_star(bad, 2), std::invalid_argument);
  CHECK_THROWS_AS(exp_dot(bad, 2), std::invalid_argument);
}

TEST_CASE("exp_dot support is concatenation powers of the exponent") {
  auto alpha = TruncatedSeries::delta(fst("a[]"), 4);
  auto ed = exp_dot(alpha, 4);
  CHECK(pairing(ed, fst("a[]a[]a[]")) == Rational(1, 6));
  CHECK(pairing(ed, fst("a[]a[]a[]a[]")) == Rational(1, 24));
  CHECK(pairing(ed, fst("a[a[]]a[]")) == 0);
}

TEST_CASE("derivative of exp_star factors through its own group-likeness") {
  // d/dt exp*(t a) = exp*(t a) * a, and since exp*(t a) is group-like for
  // the deshuffle coproduct this equals exp*(t a) . (exp*(t a) |> a).
  // Collected per grade g as coefficients of t^(g-1):
  //   a^{*g} / (g-1)!  ==  sum_{i+j=g-1} (a^{*i}/i!) . ((a^{*j} |> a)/j!)
  ForestVector a = ForestVector::of(fst("a[]"));
  const int max_grade = 5;

  std::vector<ForestVector> star_pow{ForestVector::unit()};
  std::vector<ForestVector> dot_pow{ForestVector::unit()};
  for (int k = 1; k <= max_grade; ++k) {
    star_pow.push_back(gl_product(star_pow.back(), a));
    dot_pow.push_back(concat(dot_pow.back(), a));
  }
  auto rhs_at_grade = [&](const std::vector<ForestVector>& pow, int g) {
    ForestVector rhs;
    for (int i = 0; i + 1 <= g; ++i) {
      int j = g - 1 - i;
      ForestVector piece = concat(pow[static_cast<std::size_t>(i)],
                                  triangle(pow[static_cast<std::size_t>(j)], a));
      rhs += Rational(1) / (factorial(static_cast<unsigned>(i)) *
                            factorial(static_cast<unsigned>(j))) *
             piece;
    }
    return rhs;
  };
  for (int g = 1; g <= max_grade; ++g) {
    ForestVector lhs = Rational(1) / factorial(static_cast<unsigned>(g - 1)) * star_pow[g];
    CHECK(lhs == rhs_at_grade(star_pow, g));
  }

  // The same factorization built from concatenation powers instead equals
  // exp.(t a) * a, which differs from d/dt exp*(t a) starting at grade 3:
  // the gap at grade g is exactly sum over the star/dot coefficient gap.
  CHECK(Rational(1, 2) * star_pow[3] != rhs_at_grade(dot_pow, 3));
  CHECK((Rational(1, 2) * star_pow[3] - rhs_at_grade(dot_pow, 3)) ==
        Rational(1, 2) * gl_product(ForestVector::of(fst("a[a[]]")), a));
}
