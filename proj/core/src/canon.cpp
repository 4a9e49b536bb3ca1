#include "ultra/canon.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace ultra {

CanonicalSignature canonical_signature(const Dendrogram& dendro) {
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
      sig[v] = "L";
    } else {
      std::vector<std::string> parts;
      parts.reserve(node.children.size());
      for (std::size_t c : node.children) parts.push_back(std::move(sig[c]));
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

CanonicalSignature canonical_signature(const UltrametricSpace& space) {
  return canonical_signature(dendrogram_of(space));
}

bool is_isometric(const UltrametricSpace& a, const UltrametricSpace& b) {
  if (a.size() != b.size()) return false;
  return canonical_signature(a) == canonical_signature(b);
}

}  // namespace ultra
