#pragma once

#include <string>
#include <vector>

#include "ultra/dendrogram.hpp"
#include "ultra/order.hpp"
#include "ultra/rational.hpp"
#include "ultra/space.hpp"

namespace ultra {

enum class RenderFormat { svg, ascii };

/// Abstract drawing of a merge tree against a leaf order. Coordinates are in
/// leaf units: leaf k of the order sits at x = k, a node attaches at the
/// midpoint of its extreme children, and a bar spans its children's attach
/// points at the node's height. With an admissible order no two segments
/// cross; `crossings` counts the block-contiguity violations, which is the
/// same number.
struct Layout {
  struct Leaf {
    std::string label;
    std::size_t rank;
  };
  struct Drop {
    Rational x;            // attach point of one child
    Rational from_height;  // child's own height (0 for leaves)
  };
  struct Bar {
    Rational height;
    Rational x_min, x_max, x_attach;
    std::vector<Drop> drops;
  };

  std::vector<Leaf> leaves;
  std::vector<Bar> bars;  // sorted by (height, x_min)
  Rational top_height;
  std::size_t crossings = 0;
};

Layout compute_layout(const Dendrogram& dendro, const std::vector<std::string>& leaf_order);

/// Deterministic text rendering. SVG uses fixed unit geometry (40 px leaf
/// spacing, 40 px per height unit, 20 px margin, declared in a header
/// comment); ASCII uses '|', '-' and '+' glyphs. The crossing count is always
/// flagged in a leading comment.
std::string render(const Dendrogram& dendro, const std::vector<std::string>& leaf_order,
                   RenderFormat format);
std::string render(const UltrametricSpace& space, const Ordering& ord, RenderFormat format);

}  // namespace ultra
