#include <doctest.h>

#include <map>
#include <vector>

#include "postlie/rational.hpp"
#include "postlie/tree.hpp"

using namespace postlie;

namespace {

// Independent counting oracle: pure convolution recurrence, no enumeration.
//   t(n) = |C| * f(n-1),   f(n) = sum_{j=1..n} t(j) f(n-j),   f(0) = 1.
struct Counter {
  explicit Counter(BigInt n_colors) : k(n_colors) {}
  BigInt trees(int n) { return n < 1 ? BigInt(0) : k * forests(n - 1); }
  BigInt forests(int n) {
    if (n == 0) return 1;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    BigInt total = 0;
    for (int j = 1; j <= n; ++j) total += trees(j) * forests(n - j);
    memo[n] = total;
    return total;
  }
  BigInt k;
  std::map<int, BigInt> memo;
};

BigInt catalan(int n) {
  // C(n) = (2n)! / (n! (n+1)!)
  BigInt num = 1, den = 1;
  for (int i = 0; i < n; ++i) {
    num *= (2 * n - i);
    den *= (i + 1);
  }
  return num / den / (n + 1);
}

}  // namespace

TEST_CASE("grammar round trips and basic parses") {
  Alphabet ab({"a", "b"});

  Tree leaf = parse_tree("a[]", ab);
  CHECK(leaf.grade() == 1);
  CHECK(leaf.branches().empty());
  CHECK(leaf.code() == "a[]");

  Tree cherry = parse_tree("a[a[],a[]]", ab);
  CHECK(cherry.grade() == 3);
  CHECK(cherry.branches().size() == 2);

  Forest two = parse_forest("a[]a[]", ab);
  CHECK(two.length() == 2);
  CHECK(two.grade() == 2);

  Forest unit = parse_forest("", ab);
  CHECK(unit.empty());
  CHECK(unit.grade() == 0);

  // whitespace ignored, nested multi-color
  Tree t = parse_tree(" a[ b[] , a[ a[] ] ] ", ab);
  CHECK(t.code() == "a[b[],a[a[]]]");
}

TEST_CASE("parse errors carry positions") {
  Alphabet ab({"a"});
  CHECK_THROWS_AS(parse_tree("a[", ab), ParseError);
  CHECK_THROWS_AS(parse_forest("a[]]", ab), ParseError);
  CHECK_THROWS_AS(parse_forest("[]", ab), ParseError);
  try {
    parse_forest("a[]b[]", ab);  // b not declared
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position == 3);
  }
}

TEST_CASE("one-color census matches the displayed low grades") {
  Alphabet a({"a"});
  CHECK(enumerate_trees(a, 1).size() == 1);
  CHECK(enumerate_trees(a, 2).size() == 1);
  CHECK(enumerate_trees(a, 3).size() == 2);
  CHECK(enumerate_trees(a, 4).size() == 5);
  CHECK(enumerate_trees(a, 5).size() == 14);

  // the nine trees of grade <= 4, in (grade, code) order
  std::vector<std::string> expected = {
      "a[]",
      "a[a[]]",
      "a[a[],a[]]",
      "a[a[a[]]]",
      "a[a[],a[],a[]]",
      "a[a[],a[a[]]]",
      "a[a[a[],a[]]]",
      "a[a[a[]],a[]]",
      "a[a[a[a[]]]]",
  };
  std::vector<std::string> got;
  for (int g = 1; g <= 4; ++g) {
    for (const auto& t : enumerate_trees(a, g)) got.push_back(t.code());
  }
  CHECK(got == expected);

  CHECK_THROWS_AS(enumerate_trees(a, 0), std::invalid_argument);
}

TEST_CASE("forest census") {
  Alphabet a({"a"});
  auto g0 = enumerate_forests(a, 0);
  REQUIRE(g0.size() == 1);
  CHECK(g0[0].empty());

  CHECK(enumerate_forests(a, 1).size() == 1);
  CHECK(enumerate_forests(a, 2).size() == 2);
  CHECK(enumerate_forests(a, 3).size() == 5);
  CHECK(enumerate_forests(a, 4).size() == 14);

  auto g2 = enumerate_forests(a, 2);
  CHECK(g2[0].code() == "a[]a[]");
  CHECK(g2[1].code() == "a[a[]]");
}

TEST_CASE("two-color counts") {
  Alphabet ab({"a", "b"});
  CHECK(enumerate_trees(ab, 1).size() == 2);
  CHECK(enumerate_trees(ab, 2).size() == 4);  // 2 root colors x 2 leaf colors
  Counter c(2);
  for (int g = 1; g <= 6; ++g) {
    CHECK(BigInt(enumerate_trees(ab, g).size()) == c.trees(g));
  }
}

TEST_CASE("Catalan counts vs independent recursive counter, n <= 8") {
  Alphabet a({"a"});
  Counter c(1);
  for (int n = 1; n <= 8; ++n) {
    BigInt enumerated = BigInt(enumerate_trees(a, n).size());
    CHECK(enumerated == c.trees(n));
    CHECK(enumerated == catalan(n - 1));
  }
  for (int n = 0; n <= 8; ++n) {
    BigInt enumerated = BigInt(enumerate_forests(a, n).size());
    CHECK(enumerated == c.forests(n));
    CHECK(enumerated == catalan(n));
  }
}

TEST_CASE("round trip parse(serialize) up to grade 6, and stable order") {
  Alphabet ab({"a", "b"});
  Alphabet a({"a"});
  for (int g = 1; g <= 6; ++g) {
    for (const auto& t : enumerate_trees(a, g)) {
      CHECK(parse_tree(t.code(), a) == t);
    }
  }
  for (int g = 0; g <= 6; ++g) {
    auto first = enumerate_forests(a, g);
    auto second = enumerate_forests(a, g);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
      CHECK(first[i] == second[i]);
      CHECK(parse_forest(first[i].code(), a) == first[i]);
    }
  }
  for (int g = 1; g <= 4; ++g) {
    for (const auto& t : enumerate_trees(ab, g)) {
      CHECK(parse_tree(t.code(), ab) == t);
    }
  }
}

TEST_CASE("alphabet validation") {
  CHECK_THROWS_AS(Alphabet({}), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet({"a", "a"}), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet({"1a"}), std::invalid_argument);
  CHECK(Alphabet::single().contains("a"));
}
