#include "ultra/ghdist.hpp"

#include <algorithm>

namespace ultra {

std::vector<Rational> ugh_candidates(const UltrametricSpace& x, const UltrametricSpace& y) {
  auto cx = spectrum(x).values;
  auto cy = spectrum(y).values;
  std::vector<Rational> merged;
  merged.reserve(cx.size() + cy.size());
  std::merge(cx.begin(), cx.end(), cy.begin(), cy.end(), std::back_inserter(merged));
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  return merged;
}

bool quotients_isometric_at(const UltrametricSpace& x, const UltrametricSpace& y,
                            const Rational& level) {
  return canonical_signature(quotient(x, level)) == canonical_signature(quotient(y, level));
}

GHResult ugh(const UltrametricSpace& x, const UltrametricSpace& y, UghMode mode) {
  const auto candidates = ugh_candidates(x, y);
  // At the last candidate (the larger diameter) both quotients are one point,
  // so a minimizer always exists.
  std::size_t found = candidates.size() - 1;
  if (mode == UghMode::linear_scan) {
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (quotients_isometric_at(x, y, candidates[i])) {
        found = i;
        break;
      }
  } else {
    std::size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
      std::size_t mid = lo + (hi - lo) / 2;
      if (quotients_isometric_at(x, y, candidates[mid]))
        hi = mid;
      else
        lo = mid + 1;
    }
    found = lo;
  }
  const Rational& level = candidates[found];
  return GHResult{level, level, canonical_signature(quotient(x, level))};
}

Rational spec_lower_bound(const UltrametricSpace& x, const UltrametricSpace& y) {
  const auto sx = spectrum(x).values;
  const auto sy = spectrum(y).values;
  Rational bound(0);
  for (const auto& v : sx)
    if (!std::binary_search(sy.begin(), sy.end(), v)) bound = max(bound, v);
  for (const auto& v : sy)
    if (!std::binary_search(sx.begin(), sx.end(), v)) bound = max(bound, v);
  return bound;
}

}  // namespace ultra
