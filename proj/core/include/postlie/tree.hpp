#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace postlie {

// Colored planar rooted trees and ordered forests. Branch order is
// significant everywhere; there is no quotient by branch permutation.
//
// Canonical text encoding (bit-exact, whitespace ignored):
//   forest := tree*                      (juxtaposition)
//   tree   := color "[" tree ("," tree)* "]"  |  color "[]"
//   color  := [A-Za-z][A-Za-z0-9_]*
// A leaf always carries its brackets ("a[]"), so multi-character color
// names never create ambiguity. The empty string encodes the empty forest.

bool is_valid_color(std::string_view name);

/// Finite, ordered color alphabet declared per session. Colors compare by
/// name; the default alphabet is the single color {a}.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> colors);
  static Alphabet single();  // {"a"}

  bool contains(std::string_view name) const;
  std::size_t size() const { return colors_.size(); }
  const std::vector<std::string>& colors() const { return colors_; }

 private:
  std::vector<std::string> colors_;
};

class Tree {
 public:
  Tree(std::string color, std::vector<Tree> branches = {});

  const std::string& color() const { return color_; }
  const std::vector<Tree>& branches() const { return branches_; }
  /// Number of vertices (>= 1).
  int grade() const { return grade_; }
  /// Canonical encoding; injective, parse(code()) == *this.
  const std::string& code() const { return code_; }

  bool operator==(const Tree& o) const { return code_ == o.code_; }
  /// Total order: grade first, then canonical code lexicographically.
  bool operator<(const Tree& o) const {
    if (grade_ != o.grade_) return grade_ < o.grade_;
    return code_ < o.code_;
  }

 private:
  std::string color_;
  std::vector<Tree> branches_;
  int grade_ = 1;
  std::string code_;
};

/// Ordered word of trees. The empty forest is the unit of concatenation.
class Forest {
 public:
  Forest() = default;
  explicit Forest(std::vector<Tree> items);
  explicit Forest(Tree t);

  const std::vector<Tree>& items() const { return items_; }
  bool empty() const { return items_.empty(); }
  std::size_t length() const { return items_.size(); }
  /// Sum of item grades; 0 for the unit.
  int grade() const { return grade_; }
  const std::string& code() const { return code_; }

  Forest concat(const Forest& o) const;

  bool operator==(const Forest& o) const { return code_ == o.code_; }
  bool operator<(const Forest& o) const {
    if (grade_ != o.grade_) return grade_ < o.grade_;
    return code_ < o.code_;
  }

 private:
  std::vector<Tree> items_;
  int grade_ = 0;
  std::string code_;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

Forest parse_forest(std::string_view code, const Alphabet& alphabet);
/// Like parse_forest but requires exactly one tree.
Tree parse_tree(std::string_view code, const Alphabet& alphabet);

/// All colored planar rooted trees of exactly the given grade, ordered by
/// canonical code. grade >= 1 required.
std::vector<Tree> enumerate_trees(const Alphabet& alphabet, int grade);

/// All ordered forests of exactly the given grade, ordered by canonical
/// code; grade 0 yields exactly the unit forest.
std::vector<Forest> enumerate_forests(const Alphabet& alphabet, int grade);

}  // namespace postlie
