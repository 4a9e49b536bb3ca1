#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ultra/dendrogram.hpp"
#include "ultra/rational.hpp"
#include "ultra/space.hpp"

namespace ultra {

/// Seeded generator used by all randomized paths. The engine is MT19937-64
/// exactly as fixed by the C++ standard, and bounded draws use rejection
/// sampling rather than std::uniform_int_distribution, so sequences are
/// byte-identical across platforms and standard libraries.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t next_below(std::uint64_t bound);

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i)
      std::swap(items[i - 1], items[next_below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

struct GenConfig {
  std::size_t n = 1;
  std::vector<Rational> height_set;  // allowed positive spectrum values
  std::uint64_t seed = 0;
  std::size_t max_arity = 3;
};

/// Random merge tree: the root draws its height from the full height set and
/// every internal descendant draws a strictly smaller one, so the resulting
/// spectrum is contained in {0} u height_set. Each node splits its leaves
/// into 2..max_arity parts; when the height set is exhausted a node must
/// split into singletons, which may exceed max_arity. Deterministic per seed.
Dendrogram random_dendrogram(const GenConfig& cfg);

/// ultrametric_of(random_dendrogram(cfg)).
UltrametricSpace random_space(const GenConfig& cfg);

/// Seeded random relabeling (a permutation of points); isometric to the input.
UltrametricSpace permute_labels(const UltrametricSpace& space, std::uint64_t seed);

}  // namespace ultra
