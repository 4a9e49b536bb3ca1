#pragma once

#include <vector>

#include "ultra/canon.hpp"
#include "ultra/rational.hpp"
#include "ultra/space.hpp"

namespace ultra {

struct GHResult {
  Rational value;
  Rational witness_level;  // the minimizing level; equals value
  CanonicalSignature witness_signature;  // common signature of both quotients there
};

enum class UghMode {
  binary_search,  // default
  linear_scan,    // exhaustive scan over the candidate set, kept as an oracle
};

/// Candidate levels {0} U spec(X) U spec(Y), sorted ascending. The minimum of
/// the structural formula always lies in this set: the isometry type of a
/// quotient is constant between consecutive spectrum values because blocks
/// are closed balls.
std::vector<Rational> ugh_candidates(const UltrametricSpace& x, const UltrametricSpace& y);

/// The monotone predicate t -> X_t isometric to Y_t.
bool quotients_isometric_at(const UltrametricSpace& x, const UltrametricSpace& y,
                            const Rational& level);

/// Exact Gromov-Hausdorff ultrametric between finite ultrametric spaces:
/// the least level at which the two quotients become isometric.
GHResult ugh(const UltrametricSpace& x, const UltrametricSpace& y,
             UghMode mode = UghMode::binary_search);

/// Spectral lower bound: the largest value in the symmetric difference of the
/// two spectra (0 when the spectra agree). Always <= ugh(x, y). When the
/// symmetric difference is nonempty the restricted spectra agree only for
/// cutoffs strictly above the returned value.
Rational spec_lower_bound(const UltrametricSpace& x, const UltrametricSpace& y);

}  // namespace ultra
