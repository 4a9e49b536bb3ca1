#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ultra/error.hpp"
#include "ultra/rational.hpp"

namespace ultra {

struct ValidationIssue {
  errc code;
  std::vector<std::size_t> where;  // witness indices: pair or triple
  std::string message;
};

/// Finite ultrametric space: distinct point labels plus an exact symmetric
/// distance table satisfying the strong triangle inequality
/// d(x,z) <= max(d(x,y), d(y,z)). Immutable after construction.
class UltrametricSpace {
 public:
  static UltrametricSpace create(std::vector<std::string> labels,
                                 std::vector<std::vector<Rational>> distances);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const Rational& dist(std::size_t i, std::size_t j) const {
    return dist_[i * labels_.size() + j];
  }
  std::optional<std::size_t> index_of(std::string_view label) const;

  bool operator==(const UltrametricSpace& o) const = default;

 private:
  UltrametricSpace(std::vector<std::string> labels, std::vector<Rational> flat)
      : labels_(std::move(labels)), dist_(std::move(flat)) {}
  friend struct SpaceAccess;

  std::vector<std::string> labels_;
  std::vector<Rational> dist_;  // row-major n*n
};

/// First violated axiom with its witness, or nullopt when the table is a
/// valid ultrametric. Checks, in order: duplicate labels, table shape, zero
/// diagonal, symmetry, positive off-diagonal, strong triangle inequality
/// (lexicographic scan over ordered triples (i,j,k) of the instance
/// d(i,k) <= max(d(i,j), d(j,k))).
std::optional<ValidationIssue> find_ultrametric_violation(
    const std::vector<std::string>& labels,
    const std::vector<std::vector<Rational>>& distances);

/// Validating constructor; throws Error carrying the issue code and witness.
UltrametricSpace validate_ultrametric(std::vector<std::string> labels,
                                      std::vector<std::vector<Rational>> distances);

/// Distinct distance values, sorted ascending, always starting with 0.
struct Spectrum {
  std::vector<Rational> values;
  bool contains(const Rational& r) const;
};

Spectrum spectrum(const UltrametricSpace& space);
std::vector<Rational> spectrum_above(const UltrametricSpace& space, const Rational& eps);
Rational diameter(const UltrametricSpace& space);

/// Closed ball [x]_t: the members of one block at a level, maximal under
/// pairwise distance <= t.
struct Block {
  std::vector<std::size_t> members;  // sorted point indices
  Rational level;
};

/// All blocks at a level, ordered by smallest member index.
std::vector<Block> blocks_at(const UltrametricSpace& space, const Rational& level);

/// Quotient at a level: one point per block, labeled by the lexicographically
/// smallest member label; distance between distinct blocks is the common
/// inter-block value (necessarily > level). quotient(X, 0) == X.
UltrametricSpace quotient(const UltrametricSpace& space, const Rational& level);

/// Restriction to a subset of points, in the order given.
UltrametricSpace subspace(const UltrametricSpace& space, std::span<const std::size_t> points);

}  // namespace ultra
