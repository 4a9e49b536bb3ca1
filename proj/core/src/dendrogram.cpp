#include "ultra/dendrogram.hpp"

#include <algorithm>
#include <unordered_set>

#include "space_access.hpp"
#include "ultra/error.hpp"

namespace ultra {

namespace {

// Post-order over a node's subtree without recursion. Bails out on inputs
// that are not trees (cycles or shared subtrees) via the push budget.
template <typename Visit>
void post_order(const std::vector<Dendrogram::Node>& nodes, std::size_t root, Visit&& visit) {
  std::vector<std::pair<std::size_t, std::size_t>> stack;  // (node, next child slot)
  stack.emplace_back(root, 0);
  std::size_t pushes = 1;
  while (!stack.empty()) {
    auto& [node, slot] = stack.back();
    if (slot < nodes[node].children.size()) {
      std::size_t child = nodes[node].children[slot++];
      if (child >= nodes.size())
        throw Error(errc::invalid_dendrogram, "child index out of range", {node, child});
      if (++pushes > nodes.size())
        throw Error(errc::invalid_dendrogram, "node list is not a tree");
      stack.emplace_back(child, 0);
    } else {
      visit(node);
      stack.pop_back();
    }
  }
}

}  // namespace

Dendrogram Dendrogram::leaf(std::string label) {
  if (label.empty()) throw Error(errc::invalid_dendrogram, "leaf label must be nonempty");
  return Dendrogram({Node{Rational(0), std::move(label), {}}}, 0);
}

Dendrogram Dendrogram::merge(const Rational& height, std::vector<Dendrogram> parts) {
  if (parts.size() < 2)
    throw Error(errc::invalid_dendrogram, "merge needs at least two children");
  std::vector<Node> nodes;
  std::vector<std::size_t> child_roots;
  for (auto& part : parts) {
    if (part.root_height() >= height)
      throw Error(errc::non_monotone_heights,
                  "merge height " + height.str() + " must exceed child height " +
                      part.root_height().str());
    const std::size_t offset = nodes.size();
    for (auto node : part.nodes_) {
      for (auto& c : node.children) c += offset;
      nodes.push_back(std::move(node));
    }
    child_roots.push_back(offset + part.root_);
  }
  nodes.push_back(Node{height, "", std::move(child_roots)});
  const std::size_t root = nodes.size() - 1;
  return from_nodes(std::move(nodes), root);
}

Dendrogram Dendrogram::from_nodes(std::vector<Node> nodes, std::size_t root) {
  if (root >= nodes.size())
    throw Error(errc::invalid_dendrogram, "root index out of range");

  std::vector<bool> seen(nodes.size(), false);
  std::unordered_set<std::string> labels;
  std::size_t visited = 0;
  post_order(nodes, root, [&](std::size_t i) {
    const Node& node = nodes[i];
    if (seen[i]) throw Error(errc::invalid_dendrogram, "node reachable twice", {i});
    seen[i] = true;
    ++visited;
    if (node.is_leaf()) {
      if (node.label.empty())
        throw Error(errc::invalid_dendrogram, "leaf without label", {i});
      if (!node.height.is_zero())
        throw Error(errc::invalid_dendrogram, "leaf height must be 0", {i});
      if (!labels.insert(node.label).second)
        throw Error(errc::duplicate_label, "duplicate leaf label '" + node.label + "'", {i});
    } else {
      if (!node.label.empty())
        throw Error(errc::invalid_dendrogram, "internal node must not carry a label", {i});
      if (node.children.size() < 2)
        throw Error(errc::invalid_dendrogram, "internal node needs at least two children", {i});
      if (node.height <= Rational(0))
        throw Error(errc::invalid_dendrogram, "internal height must be positive", {i});
      for (std::size_t c : node.children) {
        if (c >= nodes.size())
          throw Error(errc::invalid_dendrogram, "child index out of range", {i, c});
        if (nodes[c].height >= node.height)
          throw Error(errc::non_monotone_heights,
                      "child height " + nodes[c].height.str() +
                          " not below parent height " + node.height.str(),
                      {i, c});
      }
    }
  });
  if (visited != nodes.size())
    throw Error(errc::invalid_dendrogram, "unreachable nodes present");
  return Dendrogram(std::move(nodes), root);
}

std::size_t Dendrogram::leaf_count() const {
  std::size_t count = 0;
  for (const auto& node : nodes_)
    if (node.is_leaf()) ++count;
  return count;
}

std::vector<std::size_t> Dendrogram::leaves_under(std::size_t node_index) const {
  std::vector<std::size_t> leaves;
  post_order(nodes_, node_index, [&](std::size_t i) {
    if (nodes_[i].is_leaf()) leaves.push_back(i);
  });
  return leaves;
}

std::vector<std::string> Dendrogram::leaf_labels() const {
  std::vector<std::string> labels;
  for (std::size_t i : leaves_under(root_)) labels.push_back(nodes_[i].label);
  return labels;
}

Dendrogram dendrogram_of(const UltrametricSpace& space) {
  const std::size_t n = space.size();
  std::vector<Dendrogram::Node> nodes;
  nodes.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    nodes.push_back(Dendrogram::Node{Rational(0), space.label(i), {}});
  if (n == 1) return Dendrogram::from_nodes(std::move(nodes), 0);

  // cluster_node[p] = node currently covering point p
  std::vector<std::size_t> cluster_node(n);
  for (std::size_t i = 0; i < n; ++i) cluster_node[i] = i;

  auto spec = spectrum(space).values;
  for (const Rational& t : spec) {
    if (t.is_zero()) continue;
    for (const Block& block : blocks_at(space, t)) {
      std::vector<std::size_t> children;  // distinct clusters, first-appearance order
      for (std::size_t p : block.members) {
        std::size_t c = cluster_node[p];
        if (std::find(children.begin(), children.end(), c) == children.end())
          children.push_back(c);
      }
      if (children.size() < 2) continue;
      nodes.push_back(Dendrogram::Node{t, "", children});
      const std::size_t merged = nodes.size() - 1;
      for (std::size_t p : block.members) cluster_node[p] = merged;
    }
  }
  return Dendrogram::from_nodes(std::move(nodes), cluster_node[0]);
}

UltrametricSpace ultrametric_of(const Dendrogram& dendro) {
  const auto leaf_nodes = dendro.leaves_under(dendro.root());
  const std::size_t n = leaf_nodes.size();
  std::vector<std::string> labels;
  labels.reserve(n);
  std::vector<std::size_t> leaf_pos(dendro.node_count(), n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(dendro.node(leaf_nodes[i]).label);
    leaf_pos[leaf_nodes[i]] = i;
  }

  std::vector<Rational> flat(n * n);
  // Pairs of leaves in different children of a node sit at exactly its height.
  for (std::size_t v = 0; v < dendro.node_count(); ++v) {
    const auto& node = dendro.node(v);
    if (node.is_leaf()) continue;
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t c : node.children) {
      std::vector<std::size_t> group;
      for (std::size_t leaf : dendro.leaves_under(c)) group.push_back(leaf_pos[leaf]);
      groups.push_back(std::move(group));
    }
    for (std::size_t a = 0; a < groups.size(); ++a)
      for (std::size_t b = a + 1; b < groups.size(); ++b)
        for (std::size_t x : groups[a])
          for (std::size_t y : groups[b]) {
            flat[x * n + y] = node.height;
            flat[y * n + x] = node.height;
          }
  }
  return SpaceAccess::make(std::move(labels), std::move(flat));
}

std::string labeled_signature(const Dendrogram& dendro) {
  std::vector<std::string> sig(dendro.node_count());
  std::vector<std::pair<std::size_t, std::size_t>> stack{{dendro.root(), 0}};
  while (!stack.empty()) {
    auto& [v, slot] = stack.back();
    const auto& node = dendro.node(v);
    if (slot < node.children.size()) {
      stack.emplace_back(node.children[slot++], 0);
      continue;
    }
    if (node.is_leaf()) {
      // Length-prefixed so arbitrary label bytes cannot collide with grammar.
      sig[v] = "l" + std::to_string(node.label.size()) + ":" + node.label;
    } else {
      std::vector<std::string> parts;
      for (std::size_t c : node.children) parts.push_back(sig[c]);
      std::sort(parts.begin(), parts.end());
      std::string s = "(" + node.height.str() + ";";
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += parts[i];
      }
      sig[v] = s + ")";
    }
    stack.pop_back();
  }
  return sig[dendro.root()];
}

bool structurally_equal(const Dendrogram& a, const Dendrogram& b) {
  return labeled_signature(a) == labeled_signature(b);
}

}  // namespace ultra
