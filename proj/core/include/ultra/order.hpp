#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ultra/dendrogram.hpp"
#include "ultra/rational.hpp"
#include "ultra/space.hpp"

namespace ultra {

/// Total order on a space's points: points[rank] is the point index placed at
/// that rank, ascending.
struct Ordering {
  std::vector<std::size_t> points;

  std::size_t size() const { return points.size(); }
  /// Inverse permutation: ranks()[point index] = rank.
  std::vector<std::size_t> ranks() const;
};

/// Constructs an admissible order by insertion: points are processed in the
/// given sequence; each new point finds the set M of already-placed points at
/// minimal distance, takes the element of M that is least in the current
/// order, and is inserted immediately before it. The result always satisfies
/// the admissibility condition d(x,y) <= d(x,z) for x < y < z.
Ordering admissible_order(const UltrametricSpace& space,
                          std::span<const std::size_t> insertion_sequence);
/// Default insertion sequence: points sorted by label.
Ordering admissible_order(const UltrametricSpace& space);

/// Lexicographically first violating rank triple (i,j,k), i<j<k with
/// d(p_i,p_j) > d(p_i,p_k), or nullopt when the order is admissible.
std::optional<std::array<std::size_t, 3>> admissibility_violation(const UltrametricSpace& space,
                                                                  const Ordering& ord);
bool is_admissible(const UltrametricSpace& space, const Ordering& ord);

struct ContiguityViolation {
  Rational level;                  // height of the block's merge node
  std::vector<std::size_t> block;  // the block's members, sorted
  std::size_t intruder;            // outsider whose rank falls strictly inside the span
  // The space overload reports point indices; the dendrogram overload ranks.
};

struct ContiguityReport {
  std::vector<ContiguityViolation> violations;
  std::size_t count() const { return violations.size(); }
};

/// Counts (block, point) pairs where the point's rank falls strictly inside
/// the block's rank span without belonging to it. Zero iff the order is
/// admissible, i.e. iff the dendrogram draws without self-crossing.
ContiguityReport contiguity_violations(const UltrametricSpace& space, const Ordering& ord);

/// Same check on an existing merge tree; leaf_order lists the leaf labels by
/// rank and must cover the tree's leaves exactly.
ContiguityReport contiguity_violations(const Dendrogram& dendro,
                                       const std::vector<std::string>& leaf_order);

/// Resolves an order given as labels (CLI form "c,b,a").
Ordering ordering_from_labels(const UltrametricSpace& space,
                              std::span<const std::string> labels);

}  // namespace ultra
