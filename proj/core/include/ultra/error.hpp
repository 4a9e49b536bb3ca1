#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ultra {

enum class errc {
  duplicate_label,
  non_zero_diagonal,
  non_symmetric,
  zero_off_diagonal,
  strong_triangle_violation,
  negative_level,
  invalid_sequence,
  not_admissible,
  inconsistent_distances,
  base_not_isometric,
  empty_subset,
  impossible_config,
  parse_error,
  non_monotone_heights,
  bad_ids,
  unknown_leaf,
  invalid_dendrogram,
  mismatched_input,
};

std::string_view errc_name(errc code);

/// Domain error carrying a machine-checkable code plus the point indices
/// (or ranks) that witness the failure, when one exists.
class Error : public std::runtime_error {
 public:
  Error(errc code, std::string message, std::vector<std::size_t> witness = {})
      : std::runtime_error(std::move(message)),
        code_(code),
        witness_(std::move(witness)) {}

  errc code() const noexcept { return code_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  errc code_;
  std::vector<std::size_t> witness_;
};

}  // namespace ultra
