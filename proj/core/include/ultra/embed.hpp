#pragma once

#include <span>
#include <string>
#include <vector>

#include "ultra/order.hpp"
#include "ultra/rational.hpp"
#include "ultra/space.hpp"

namespace ultra {

/// Image of an embedding into the space of finite ultrametric spaces under
/// the Gromov-Hausdorff ultrametric: images[i] is the space assigned to the
/// source point source_labels[i].
struct SpaceFamily {
  std::vector<std::string> source_labels;
  std::vector<UltrametricSpace> images;

  std::size_t size() const { return images.size(); }
};

/// Prefix embedding along an admissible order: the image of the i-th point in
/// the order is the subspace of the first i+1 points. Pairwise ugh values of
/// the images reproduce the source distances exactly.
SpaceFamily embed_finite(const UltrametricSpace& space, const Ordering& ord);

struct ExtensionInput {
  UltrametricSpace base;                 // the embedded source, aligned with images
  std::vector<UltrametricSpace> images;  // its images, one per base point
  std::string new_label;
  std::vector<Rational> distances;       // new point to each base point, all > 0
};

/// One-point extension: produces an image for a new point at the declared
/// distances from the existing images. With delta the smallest declared
/// distance and M its argmin set, the result is Z u {N+1 fresh points} where
/// Z is the level-delta quotient of any image in M (all isometric) and
/// N = max over M of the size of the level-delta/2 quotient. A basepoint
/// z* in Z (lexicographically smallest label) sits at distance delta from
/// every fresh point, fresh points are pairwise delta apart, and every other
/// z in Z keeps its distance to z* as its distance to each fresh point.
UltrametricSpace one_point_extension(const ExtensionInput& input);

/// Extends a verified partial embedding of the points `embedded` to the whole
/// space by repeated one-point extension, taking the missing points in
/// ascending label order.
SpaceFamily extend_embedding(const UltrametricSpace& whole,
                             std::span<const std::size_t> embedded,
                             const SpaceFamily& partial);

struct EmbeddingReport {
  struct Deviation {
    std::size_t i, j;  // family positions
    Rational expected, actual;
  };
  std::size_t pairs = 0;
  std::vector<Deviation> deviations;
  bool passed() const { return deviations.empty(); }
};

/// Recomputes every pairwise ugh value of the family and compares it with the
/// source distance; passes iff all pairs match exactly.
EmbeddingReport verify_embedding(const UltrametricSpace& source, const SpaceFamily& family);

}  // namespace ultra
