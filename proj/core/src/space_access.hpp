#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ultra/space.hpp"

namespace ultra {

// Internal unchecked construction for operations whose output is valid by
// construction (quotient, subspace, merge-tree conversion, generation).
// Not installed; library-internal only.
struct SpaceAccess {
  static UltrametricSpace make(std::vector<std::string> labels, std::vector<Rational> flat) {
    return UltrametricSpace(std::move(labels), std::move(flat));
  }
};

}  // namespace ultra
