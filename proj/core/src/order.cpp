#include "ultra/order.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "ultra/error.hpp"

namespace ultra {

namespace {

void require_permutation(std::span<const std::size_t> seq, std::size_t n, errc code) {
  if (seq.size() != n)
    throw Error(code, "expected a permutation of all " + std::to_string(n) + " point indices");
  std::vector<bool> seen(n, false);
  for (std::size_t p : seq) {
    if (p >= n || seen[p])
      throw Error(code, "not a permutation: index " + std::to_string(p), {p});
    seen[p] = true;
  }
}

}  // namespace

std::vector<std::size_t> Ordering::ranks() const {
  std::vector<std::size_t> r(points.size());
  for (std::size_t rank = 0; rank < points.size(); ++rank) r[points[rank]] = rank;
  return r;
}

Ordering admissible_order(const UltrametricSpace& space,
                          std::span<const std::size_t> insertion_sequence) {
  const std::size_t n = space.size();
  require_permutation(insertion_sequence, n, errc::invalid_sequence);

  std::vector<std::size_t> placed;  // point indices by current rank
  placed.reserve(n);
  for (std::size_t p : insertion_sequence) {
    if (placed.empty()) {
      placed.push_back(p);
      continue;
    }
    Rational closest = space.dist(p, placed[0]);
    for (std::size_t q : placed) closest = min(closest, space.dist(p, q));
    // The first rank attaining the minimum is the order-least element of M.
    std::size_t before = 0;
    while (space.dist(p, placed[before]) != closest) ++before;
    placed.insert(placed.begin() + static_cast<std::ptrdiff_t>(before), p);
  }
  return Ordering{std::move(placed)};
}

Ordering admissible_order(const UltrametricSpace& space) {
  std::vector<std::size_t> seq(space.size());
  std::iota(seq.begin(), seq.end(), 0);
  std::sort(seq.begin(), seq.end(),
            [&](std::size_t a, std::size_t b) { return space.label(a) < space.label(b); });
  return admissible_order(space, seq);
}

std::optional<std::array<std::size_t, 3>> admissibility_violation(const UltrametricSpace& space,
                                                                  const Ordering& ord) {
  const std::size_t n = space.size();
  require_permutation(ord.points, n, errc::invalid_sequence);
  for (std::size_t i = 0; i + 2 < n; ++i)
    for (std::size_t j = i + 1; j + 1 < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (space.dist(ord.points[i], ord.points[j]) > space.dist(ord.points[i], ord.points[k]))
          return std::array<std::size_t, 3>{i, j, k};
  return std::nullopt;
}

bool is_admissible(const UltrametricSpace& space, const Ordering& ord) {
  return !admissibility_violation(space, ord).has_value();
}

ContiguityReport contiguity_violations(const Dendrogram& dendro,
                                       const std::vector<std::string>& leaf_order) {
  std::unordered_map<std::string_view, std::size_t> rank_of;
  for (std::size_t r = 0; r < leaf_order.size(); ++r)
    if (!rank_of.emplace(leaf_order[r], r).second)
      throw Error(errc::invalid_sequence, "duplicate label in order: '" + leaf_order[r] + "'");

  const auto leaf_nodes = dendro.leaves_under(dendro.root());
  if (leaf_nodes.size() != leaf_order.size())
    throw Error(errc::mismatched_input, "order does not cover all leaves");
  std::vector<std::size_t> rank_of_node(dendro.node_count(), 0);
  for (std::size_t leaf : leaf_nodes) {
    auto it = rank_of.find(dendro.node(leaf).label);
    if (it == rank_of.end())
      throw Error(errc::unknown_leaf, "unknown leaf '" + dendro.node(leaf).label + "'");
    rank_of_node[leaf] = it->second;
  }

  ContiguityReport report;
  std::vector<bool> in_block(leaf_order.size());
  for (std::size_t v = 0; v < dendro.node_count(); ++v) {
    if (dendro.node(v).is_leaf()) continue;
    std::vector<std::size_t> block_ranks;
    for (std::size_t leaf : dendro.leaves_under(v)) block_ranks.push_back(rank_of_node[leaf]);
    std::sort(block_ranks.begin(), block_ranks.end());
    std::fill(in_block.begin(), in_block.end(), false);
    for (std::size_t r : block_ranks) in_block[r] = true;
    for (std::size_t r = block_ranks.front() + 1; r < block_ranks.back(); ++r)
      if (!in_block[r])
        report.violations.push_back(ContiguityViolation{dendro.node(v).height, block_ranks, r});
  }
  return report;
}

ContiguityReport contiguity_violations(const UltrametricSpace& space, const Ordering& ord) {
  require_permutation(ord.points, space.size(), errc::invalid_sequence);
  std::vector<std::string> leaf_order;
  leaf_order.reserve(ord.size());
  for (std::size_t p : ord.points) leaf_order.push_back(space.label(p));
  auto report = contiguity_violations(dendrogram_of(space), leaf_order);
  // Translate block/intruder ranks back to the space's point indices.
  for (auto& violation : report.violations) {
    for (auto& r : violation.block) r = ord.points[r];
    violation.intruder = ord.points[violation.intruder];
    std::sort(violation.block.begin(), violation.block.end());
  }
  return report;
}

Ordering ordering_from_labels(const UltrametricSpace& space,
                              std::span<const std::string> labels) {
  std::vector<std::size_t> points;
  points.reserve(labels.size());
  for (const auto& label : labels) {
    auto idx = space.index_of(label);
    if (!idx) throw Error(errc::unknown_leaf, "unknown label '" + label + "'");
    points.push_back(*idx);
  }
  require_permutation(points, space.size(), errc::invalid_sequence);
  return Ordering{std::move(points)};
}

}  // namespace ultra
