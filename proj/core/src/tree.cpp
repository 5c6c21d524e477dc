#include "postlie/tree.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <utility>

namespace postlie {

bool is_valid_color(std::string_view name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name.substr(1)) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

Alphabet::Alphabet(std::vector<std::string> colors) : colors_(std::move(colors)) {
  if (colors_.empty()) throw std::invalid_argument("alphabet must be nonempty");
  for (const auto& c : colors_) {
    if (!is_valid_color(c)) throw std::invalid_argument("invalid color name: " + c);
  }
  auto sorted = colors_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate color in alphabet");
}

Alphabet Alphabet::single() { return Alphabet({"a"}); }

bool Alphabet::contains(std::string_view name) const {
  return std::find(colors_.begin(), colors_.end(), name) != colors_.end();
}

Tree::Tree(std::string color, std::vector<Tree> branches)
    : color_(std::move(color)), branches_(std::move(branches)) {
  if (!is_valid_color(color_)) throw std::invalid_argument("invalid color name: " + color_);
  code_ = color_;
  code_ += '[';
  for (std::size_t i = 0; i < branches_.size(); ++i) {
    if (i > 0) code_ += ',';
    code_ += branches_[i].code();
    grade_ += branches_[i].grade();
  }
  code_ += ']';
}

Forest::Forest(std::vector<Tree> items) : items_(std::move(items)) {
  for (const auto& t : items_) {
    grade_ += t.grade();
    code_ += t.code();
  }
}

Forest::Forest(Tree t) : Forest(std::vector<Tree>{std::move(t)}) {}

Forest Forest::concat(const Forest& o) const {
  std::vector<Tree> items = items_;
  items.insert(items.end(), o.items_.begin(), o.items_.end());
  return Forest(std::move(items));
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

  Forest parse_forest_all() {
    std::vector<Tree> items;
    skip_ws();
    while (!at_end()) {
      items.push_back(parse_tree_one());
      skip_ws();
    }
    return Forest(std::move(items));
  }

  Tree parse_single_tree() {
    skip_ws();
    if (at_end()) throw ParseError("expected a tree", pos_);
    Tree t = parse_tree_one();
    skip_ws();
    if (!at_end()) throw ParseError("trailing input after single tree", pos_);
    return t;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  Tree parse_tree_one() {
    std::size_t color_start = pos_;
    if (at_end() || !std::isalpha(static_cast<unsigned char>(peek())))
      throw ParseError("expected color name", pos_);
    ++pos_;
    while (!at_end() &&
           (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
      ++pos_;
    std::string color(text_.substr(color_start, pos_ - color_start));
    if (!alphabet_.contains(color))
      throw ParseError("unknown color '" + color + "'", color_start);
    skip_ws();
    if (at_end() || peek() != '[') throw ParseError("expected '['", pos_);
    ++pos_;
    std::vector<Tree> branches;
    skip_ws();
    if (!at_end() && peek() != ']') {
      branches.push_back(parse_tree_one());
      skip_ws();
      while (!at_end() && peek() == ',') {
        ++pos_;
        skip_ws();
        branches.push_back(parse_tree_one());
        skip_ws();
      }
    }
    if (at_end() || peek() != ']') throw ParseError("expected ']'", pos_);
    ++pos_;
    return Tree(std::move(color), std::move(branches));
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

Forest parse_forest(std::string_view code, const Alphabet& alphabet) {
  return Parser(code, alphabet).parse_forest_all();
}

Tree parse_tree(std::string_view code, const Alphabet& alphabet) {
  return Parser(code, alphabet).parse_single_tree();
}

namespace {

// Recursive generation with a per-call memo; results sorted by code within
// each grade so listings are stable across runs.
class Enumerator {
 public:
  explicit Enumerator(const Alphabet& alphabet) : alphabet_(alphabet) {}

  const std::vector<Tree>& trees(int grade) {
    auto it = trees_.find(grade);
    if (it != trees_.end()) return it->second;
    std::vector<Tree> out;
    for (const auto& color : alphabet_.colors()) {
      for (const auto& branch_word : forests(grade - 1)) {
        out.emplace_back(color, branch_word.items());
      }
    }
    std::sort(out.begin(), out.end());
    return trees_.emplace(grade, std::move(out)).first->second;
  }

  const std::vector<Forest>& forests(int grade) {
    auto it = forests_.find(grade);
    if (it != forests_.end()) return it->second;
    std::vector<Forest> out;
    if (grade == 0) {
      out.emplace_back();
    } else {
      for (int head = 1; head <= grade; ++head) {
        for (const auto& t : trees(head)) {
          for (const auto& rest : forests(grade - head)) {
            std::vector<Tree> items;
            items.reserve(1 + rest.items().size());
            items.push_back(t);
            items.insert(items.end(), rest.items().begin(), rest.items().end());
            out.emplace_back(std::move(items));
          }
        }
      }
      std::sort(out.begin(), out.end());
    }
    return forests_.emplace(grade, std::move(out)).first->second;
  }

 private:
  const Alphabet& alphabet_;
  std::map<int, std::vector<Tree>> trees_;
  std::map<int, std::vector<Forest>> forests_;
};

}  // namespace

std::vector<Tree> enumerate_trees(const Alphabet& alphabet, int grade) {
  if (grade < 1) throw std::invalid_argument("tree grade must be >= 1");
  return Enumerator(alphabet).trees(grade);
}

std::vector<Forest> enumerate_forests(const Alphabet& alphabet, int grade) {
  if (grade < 0) throw std::invalid_argument("forest grade must be >= 0");
  return Enumerator(alphabet).forests(grade);
}

}  // namespace postlie
