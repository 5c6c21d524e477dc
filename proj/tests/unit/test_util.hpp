#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "postlie/forest_vector.hpp"
#include "postlie/tree.hpp"

namespace testutil {

// Deterministic across platforms: raw engine output mapped to [0,1).
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline postlie::Rational random_rational(std::mt19937_64& rng) {
  int num = uniform_int(rng, -9, 9);
  int den = uniform_int(rng, 1, 9);
  return postlie::Rational(num, den);
}

// Random primitive: a linear combination of single trees of grade <= max_grade.
inline postlie::ForestVector random_primitive(std::mt19937_64& rng,
                                              const postlie::Alphabet& alphabet,
                                              int max_grade, int n_terms = 3) {
  std::vector<postlie::Tree> pool;
  for (int g = 1; g <= max_grade; ++g) {
    auto trees = postlie::enumerate_trees(alphabet, g);
    pool.insert(pool.end(), trees.begin(), trees.end());
  }
  postlie::ForestVector v;
  for (int i = 0; i < n_terms; ++i) {
    const auto& t = pool[static_cast<std::size_t>(uniform_int(
        rng, 0, static_cast<int>(pool.size()) - 1))];
    v += postlie::ForestVector::of(t, random_rational(rng));
  }
  return v;
}

// Random element of the enveloping algebra with forests of grade <= max_grade.
inline postlie::ForestVector random_forest_vector(std::mt19937_64& rng,
                                                  const postlie::Alphabet& alphabet,
                                                  int max_grade, int n_terms = 3) {
  postlie::ForestVector v;
  for (int i = 0; i < n_terms; ++i) {
    int g = uniform_int(rng, 0, max_grade);
    auto forests = postlie::enumerate_forests(alphabet, g);
    const auto& f = forests[static_cast<std::size_t>(uniform_int(
        rng, 0, static_cast<int>(forests.size()) - 1))];
    v += postlie::ForestVector::of(f, random_rational(rng));
  }
  return v;
}

}  // namespace testutil
