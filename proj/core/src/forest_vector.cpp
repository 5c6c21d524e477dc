#include "postlie/forest_vector.hpp"

#include <stdexcept>

namespace postlie {

ForestVector ForestVector::unit() { return of(Forest{}); }

ForestVector ForestVector::of(const Forest& f, const Rational& c) {
  ForestVector v;
  v.add_term(f, c);
  return v;
}

ForestVector ForestVector::of(const Tree& t, const Rational& c) { return of(Forest(t), c); }

Rational ForestVector::coefficient(const Forest& f) const {
  auto it = terms_.find(f);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool ForestVector::is_primitive() const {
  for (const auto& [f, c] : terms_) {
    if (f.length() != 1) return false;
  }
  return true;
}

int ForestVector::max_grade() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first.grade();
}

void ForestVector::add_term(const Forest& f, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(f, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ForestVector& ForestVector::operator+=(const ForestVector& o) {
  for (const auto& [f, c] : o.terms_) add_term(f, c);
  return *this;
}

ForestVector& ForestVector::operator-=(const ForestVector& o) {
  for (const auto& [f, c] : o.terms_) add_term(f, -c);
  return *this;
}

ForestVector& ForestVector::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [f, coeff] : terms_) coeff *= c;
  return *this;
}

ForestVector ForestVector::operator-() const {
  ForestVector v = *this;
  return v *= Rational(-1);
}

ForestVector ForestVector::truncated(int n) const {
  ForestVector v;
  for (const auto& [f, c] : terms_) {
    if (f.grade() <= n) v.add_term(f, c);
  }
  return v;
}

ForestVector graft(const Tree& scion, const Tree& target) {
  ForestVector out;
  // scion as new leftmost branch of the root
  std::vector<Tree> branches;
  branches.reserve(target.branches().size() + 1);
  branches.push_back(scion);
  branches.insert(branches.end(), target.branches().begin(), target.branches().end());
  out.add_term(Forest(Tree(target.color(), std::move(branches))), 1);
  // recursively into each branch
  for (std::size_t i = 0; i < target.branches().size(); ++i) {
    ForestVector sub = graft(scion, target.branches()[i]);
    for (const auto& [sf, sc] : sub.terms()) {
      std::vector<Tree> replaced = target.branches();
      replaced[i] = sf.items().front();
      out.add_term(Forest(Tree(target.color(), std::move(replaced))), sc);
    }
  }
  return out;
}

ForestVector concat(const ForestVector& a, const ForestVector& b) {
  ForestVector out;
  for (const auto& [fa, ca] : a.terms()) {
    for (const auto& [fb, cb] : b.terms()) {
      out.add_term(fa.concat(fb), ca * cb);
    }
  }
  return out;
}

namespace {

// single tree acting as a derivation across the word's items
ForestVector graft_into_word(const Tree& scion, const Forest& word) {
  ForestVector out;
  for (std::size_t i = 0; i < word.length(); ++i) {
    ForestVector sub = graft(scion, word.items()[i]);
    for (const auto& [sf, sc] : sub.terms()) {
      std::vector<Tree> items = word.items();
      items[i] = sf.items().front();
      out.add_term(Forest(std::move(items)), sc);
    }
  }
  return out;  // empty word -> 0
}

ForestVector triangle_word(const Forest& actor, const Forest& target);

ForestVector triangle_fv_word(const ForestVector& actor, const Forest& target) {
  ForestVector out;
  for (const auto& [f, c] : actor.terms()) out += c * triangle_word(f, target);
  return out;
}

ForestVector triangle_word(const Forest& actor, const Forest& target) {
  if (actor.empty()) return ForestVector::of(target);
  if (actor.length() == 1) return graft_into_word(actor.items().front(), target);
  // (x . rest) |> target = x |> (rest |> target) - (x |> rest) |> target
  const Tree& head = actor.items().front();
  Forest rest(std::vector<Tree>(actor.items().begin() + 1, actor.items().end()));
  ForestVector first;
  {
    ForestVector inner = triangle_word(rest, target);
    for (const auto& [f, c] : inner.terms()) first += c * graft_into_word(head, f);
  }
  ForestVector head_into_rest = graft_into_word(head, rest);
  return first - triangle_fv_word(head_into_rest, target);
}

}  // namespace

ForestVector triangle(const ForestVector& a, const ForestVector& b) {
  ForestVector out;
  for (const auto& [fa, ca] : a.terms()) {
    for (const auto& [fb, cb] : b.terms()) {
      out += (ca * cb) * triangle_word(fa, fb);
    }
  }
  return out;
}

ForestVector lie_bracket(const ForestVector& a, const ForestVector& b) {
  return concat(a, b) - concat(b, a);
}

std::vector<std::pair<Forest, Forest>> deshuffle(const Forest& f) {
  const auto& items = f.items();
  const std::size_t k = items.size();
  std::vector<std::pair<Forest, Forest>> out;
  out.reserve(std::size_t{1} << k);
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<Tree> left, right;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::size_t{1} << i)) {
        left.push_back(items[i]);
      } else {
        right.push_back(items[i]);
      }
    }
    out.emplace_back(Forest(std::move(left)), Forest(std::move(right)));
  }
  return out;
}

ForestVector gl_product(const ForestVector& a, const ForestVector& b) {
  ForestVector out;
  for (const auto& [fa, ca] : a.terms()) {
    for (const auto& [left, right] : deshuffle(fa)) {
      for (const auto& [fb, cb] : b.terms()) {
        ForestVector acted = triangle_word(right, fb);
        for (const auto& [ff, cf] : acted.terms()) {
          out.add_term(left.concat(ff), ca * cb * cf);
        }
      }
    }
  }
  return out;
}

std::pair<ForestVector, ForestVector> postlie_axiom_residuals(const ForestVector& x,
                                                              const ForestVector& y,
                                                              const ForestVector& z) {
  if (!x.is_primitive() || !y.is_primitive() || !z.is_primitive())
    throw std::invalid_argument("postlie_axiom_residuals requires primitive arguments");
  auto assoc = [](const ForestVector& a, const ForestVector& b, const ForestVector& c) {
    return triangle(a, triangle(b, c)) - triangle(triangle(a, b), c);
  };
  ForestVector r1 = triangle(x, lie_bracket(y, z)) - lie_bracket(triangle(x, y), z) -
                    lie_bracket(y, triangle(x, z));
  ForestVector r2 =
      triangle(lie_bracket(x, y), z) - assoc(x, y, z) + assoc(y, x, z);
  return {r1, r2};
}

}  // namespace postlie
