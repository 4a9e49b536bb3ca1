#include "ultra/gen.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "space_access.hpp"
#include "ultra/error.hpp"

namespace ultra {

std::uint64_t SeededRng::next_below(std::uint64_t bound) {
  if (bound == 0) throw std::domain_error("next_below needs a positive bound");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return v % bound;
}

namespace {

std::vector<Rational> normalized_heights(const GenConfig& cfg) {
  std::vector<Rational> heights = cfg.height_set;
  for (const auto& h : heights)
    if (h <= Rational(0))
      throw Error(errc::impossible_config, "heights must be positive, got " + h.str());
  std::sort(heights.begin(), heights.end());
  heights.erase(std::unique(heights.begin(), heights.end()), heights.end());
  return heights;
}

std::vector<std::string> default_labels(std::size_t n) {
  std::size_t width = std::to_string(n == 0 ? 1 : n - 1).size();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string digits = std::to_string(i);
    labels.push_back("p" + std::string(width - digits.size(), '0') + digits);
  }
  return labels;
}

struct TreeBuilder {
  const std::vector<Rational>& heights;
  std::size_t max_arity;
  SeededRng& rng;
  std::vector<Dendrogram::Node> nodes;

  std::size_t leaf(const std::string& label) {
    nodes.push_back(Dendrogram::Node{Rational(0), label, {}});
    return nodes.size() - 1;
  }

  // Builds a subtree over labels[lo, hi) with heights up to index hi_height.
  std::size_t build(const std::vector<std::string>& labels, std::size_t lo, std::size_t hi,
                    std::size_t hi_height) {
    const std::size_t count = hi - lo;
    if (count == 1) return leaf(labels[lo]);

    const std::size_t hidx = rng.next_below(hi_height + 1);
    std::vector<std::size_t> children;
    if (hidx == 0) {
      // No smaller height remains: all members split off as leaves.
      for (std::size_t i = lo; i < hi; ++i) children.push_back(leaf(labels[i]));
    } else {
      const std::size_t arity = 2 + rng.next_below(std::min(max_arity, count) - 1);
      // arity-1 distinct cut positions inside (lo, hi)
      std::vector<std::size_t> gaps(count - 1);
      std::iota(gaps.begin(), gaps.end(), lo + 1);
      rng.shuffle(gaps);
      std::vector<std::size_t> cuts(gaps.begin(), gaps.begin() + (arity - 1));
      cuts.push_back(lo);
      cuts.push_back(hi);
      std::sort(cuts.begin(), cuts.end());
      for (std::size_t c = 0; c + 1 < cuts.size(); ++c)
        children.push_back(build(labels, cuts[c], cuts[c + 1], hidx - 1));
    }
    nodes.push_back(Dendrogram::Node{heights[hidx], "", std::move(children)});
    return nodes.size() - 1;
  }
};

}  // namespace

Dendrogram random_dendrogram(const GenConfig& cfg) {
  if (cfg.n == 0) throw Error(errc::impossible_config, "n must be at least 1");
  if (cfg.max_arity < 2) throw Error(errc::impossible_config, "max_arity must be at least 2");
  auto labels = default_labels(cfg.n);
  if (cfg.n == 1) return Dendrogram::leaf(labels[0]);

  const auto heights = normalized_heights(cfg);
  if (heights.empty())
    throw Error(errc::impossible_config, "height set must be nonempty for n >= 2");

  SeededRng rng(cfg.seed);
  rng.shuffle(labels);
  TreeBuilder builder{heights, cfg.max_arity, rng, {}};
  const std::size_t root = builder.build(labels, 0, cfg.n, heights.size() - 1);
  return Dendrogram::from_nodes(std::move(builder.nodes), root);
}

UltrametricSpace random_space(const GenConfig& cfg) {
  return ultrametric_of(random_dendrogram(cfg));
}

UltrametricSpace permute_labels(const UltrametricSpace& space, std::uint64_t seed) {
  const std::size_t n = space.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  SeededRng rng(seed);
  rng.shuffle(perm);

  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(space.label(perm[i]));
  std::vector<Rational> flat(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = space.dist(perm[i], perm[j]);
  return SpaceAccess::make(std::move(labels), std::move(flat));
}

}  // namespace ultra
