#pragma once

// Test-only oracles and fixtures. The isometry oracle here is intentionally
// independent of the canonical-signature path it is used to check: it
// searches all label bijections on the raw distance tables.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "ultra/rational.hpp"
#include "ultra/space.hpp"

namespace ultra::testing {

inline UltrametricSpace one_point(const std::string& label = "z") {
  return UltrametricSpace::create({label}, {{Rational(0)}});
}

inline UltrametricSpace two_point(const Rational& d, const std::string& a = "p",
                                  const std::string& b = "q") {
  return UltrametricSpace::create({a, b}, {{Rational(0), d}, {d, Rational(0)}});
}

// {a,b,c} with the given pairwise distances.
inline UltrametricSpace space3(const Rational& ab, const Rational& ac, const Rational& bc) {
  return UltrametricSpace::create(
      {"a", "b", "c"},
      {{Rational(0), ab, ac}, {ab, Rational(0), bc}, {ac, bc, Rational(0)}});
}

// The worked three-point example: ab=1, ac=2, bc=2.
inline UltrametricSpace example_e1() { return space3(Rational(1), Rational(2), Rational(2)); }

inline UltrametricSpace equilateral(std::size_t n, const Rational& d) {
  std::vector<std::string> labels;
  std::vector<std::vector<Rational>> table(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("e" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) table[i][j] = d;
  }
  return UltrametricSpace::create(std::move(labels), std::move(table));
}

inline std::vector<std::vector<Rational>> table_of(const UltrametricSpace& space) {
  std::vector<std::vector<Rational>> table(space.size(), std::vector<Rational>(space.size()));
  for (std::size_t i = 0; i < space.size(); ++i)
    for (std::size_t j = 0; j < space.size(); ++j) table[i][j] = space.dist(i, j);
  return table;
}

// Same labeled metric space, regardless of point order.
inline bool label_wise_equal(const UltrametricSpace& a, const UltrametricSpace& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto bi = b.index_of(a.label(i));
    if (!bi) return false;
    for (std::size_t j = 0; j < a.size(); ++j) {
      auto bj = b.index_of(a.label(j));
      if (!bj || a.dist(i, j) != b.dist(*bi, *bj)) return false;
    }
  }
  return true;
}

// Exhaustive search over all label bijections for a distance-preserving map.
inline bool brute_force_isometric(const UltrametricSpace& a, const UltrametricSpace& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i)
      for (std::size_t j = i + 1; j < a.size() && ok; ++j)
        if (a.dist(i, j) != b.dist(perm[i], perm[j])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace ultra::testing
