#pragma once

#include <string>

#include "ultra/dendrogram.hpp"
#include "ultra/space.hpp"

namespace ultra {

/// Label-free canonical string of a merge tree. Grammar: a leaf renders as
/// "L"; an internal node of height h with child signatures s_1..s_k renders
/// as "(h;s_1,...,s_k)" with h the reduced rational ("p" or "p/q") and the
/// children sorted ascending by byte-wise lexicographic order. Two finite
/// ultrametric spaces are isometric iff their signatures are equal.
using CanonicalSignature = std::string;

CanonicalSignature canonical_signature(const Dendrogram& dendro);
CanonicalSignature canonical_signature(const UltrametricSpace& space);

/// True iff a distance-preserving bijection exists; implemented as signature
/// equality.
bool is_isometric(const UltrametricSpace& a, const UltrametricSpace& b);

}  // namespace ultra
