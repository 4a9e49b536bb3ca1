#include "ultra/error.hpp"

namespace ultra {
std::string_view errc_name(errc code) {
  switch (code) {
    case errc::duplicate_label: return "duplicate_label";
    case errc::non_zero_diagonal: return "non_zero_diagonal";
    case errc::non_symmetric: return "non_symmetric";
    case errc::zero_off_diagonal: return "zero_off_diagonal";
    case errc::strong_triangle_violation: return "strong_triangle_violation";
    case errc::negative_level: return "negative_level";
    case errc::invalid_sequence: return "invalid_sequence";
    case errc::not_admissible: return "not_admissible";
    case errc::inconsistent_distances: return "inconsistent_distances";
    case errc::base_not_isometric: return "base_not_isometric";
    case errc::empty_subset: return "empty_subset";
    case errc::impossible_config: return "impossible_config";
    case errc::parse_error: return "parse_error";
    case errc::non_monotone_heights: return "non_monotone_heights";
    case errc::bad_ids: return "bad_ids";
    case errc::unknown_leaf: return "unknown_leaf";
    case errc::invalid_dendrogram: return "invalid_dendrogram";
    case errc::mismatched_input: return "mismatched_input";
  }
  return "unknown";
}

}  // namespace ultra
