#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ultra/dendrogram.hpp"
#include "ultra/embed.hpp"
#include "ultra/space.hpp"

namespace ultra {

/// Space document: {"points": [...], "distances": [[...]]}. Distance entries
/// are strings holding an integer, a "p/q" rational or a finite decimal, all
/// converted exactly; plain JSON integers are also accepted. JSON floats are
/// rejected to keep the exactness contract.
UltrametricSpace parse_space(std::string_view json_text);
std::string write_space(const UltrametricSpace& space);

/// Family document: {"source": <space>, "images": [<space>, ...]} with
/// images[i] the image of source point i.
struct ParsedFamily {
  UltrametricSpace source;
  SpaceFamily family;  // source_labels match source.labels()
};
ParsedFamily parse_family(std::string_view json_text);
std::string write_family(const UltrametricSpace& source, const SpaceFamily& family);

/// One merge step of a linkage table, scipy-style: row r merges clusters
/// `left` and `right` (leaves are 0..n-1, the cluster made by row r is n+r)
/// at `height`; `size` is carried through but not interpreted.
struct LinkageRow {
  std::size_t left = 0;
  std::size_t right = 0;
  Rational height;
  std::size_t size = 0;
};

/// CSV rows "left,right,height,size"; blank lines and '#' comments skipped.
std::vector<LinkageRow> parse_linkage_csv(std::string_view text);
/// JSON array of [left, right, height, size] rows; heights follow the same
/// exactness rules as space documents.
std::vector<LinkageRow> parse_linkage_json(std::string_view text);
/// Detects the format by the first non-space byte ('[' means JSON).
std::vector<LinkageRow> parse_linkage_text(std::string_view text);

/// Cophenetic reconstruction: leaves get the given labels; the distance
/// between two leaves is the height of the row where their clusters first
/// merge. Chained merges at equal heights coalesce into one k-ary node.
Dendrogram parse_linkage(std::span<const LinkageRow> rows, std::vector<std::string> labels);

}  // namespace ultra
