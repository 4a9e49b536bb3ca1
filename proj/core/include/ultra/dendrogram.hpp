#pragma once

#include <string>
#include <vector>

#include "ultra/rational.hpp"
#include "ultra/space.hpp"

namespace ultra {

/// Rooted merge tree: leaves carry point labels at height 0, internal nodes
/// carry a positive height and at least two children, and heights strictly
/// increase toward the root. Simultaneous merges at one height are a single
/// k-ary node, never a chain of binary nodes, so the representation is
/// unique for a given ultrametric.
class Dendrogram {
 public:
  struct Node {
    Rational height;                    // 0 for leaves
    std::string label;                  // nonempty exactly for leaves
    std::vector<std::size_t> children;  // >= 2 entries for internal nodes
    bool is_leaf() const { return children.empty(); }
  };

  static Dendrogram leaf(std::string label);
  static Dendrogram merge(const Rational& height, std::vector<Dendrogram> parts);
  /// Validating constructor from a raw node list.
  static Dendrogram from_nodes(std::vector<Node> nodes, std::size_t root);

  std::size_t root() const { return root_; }
  const Node& node(std::size_t i) const { return nodes_[i]; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t leaf_count() const;
  const Rational& root_height() const { return nodes_[root_].height; }

  /// Leaf node indices under a node, in depth-first order.
  std::vector<std::size_t> leaves_under(std::size_t node_index) const;
  /// Leaf labels in depth-first order from the root.
  std::vector<std::string> leaf_labels() const;

 private:
  Dendrogram(std::vector<Node> nodes, std::size_t root)
      : nodes_(std::move(nodes)), root_(root) {}

  std::vector<Node> nodes_;
  std::size_t root_ = 0;
};

/// Merge tree of a space: block structure at every level t equals the closed
/// balls [x]_t, and internal heights are exactly the positive spectrum values
/// at which blocks merge.
Dendrogram dendrogram_of(const UltrametricSpace& space);

/// Inverse direction: distance between two leaves is the height of their
/// lowest common ancestor.
UltrametricSpace ultrametric_of(const Dendrogram& dendro);

/// Child-order-insensitive structural identity including labels and heights.
std::string labeled_signature(const Dendrogram& dendro);
bool structurally_equal(const Dendrogram& a, const Dendrogram& b);

}  // namespace ultra
