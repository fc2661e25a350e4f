#pragma once

#include <optional>
#include <string>

namespace psmc {

// Non-overlapping: errors hit only non-stuck cells.  Overlapping: errors may
// hit any cell, but a corrupted stuck cell still respects its level.
enum class ErrorModel { kNonOverlapping, kOverlapping };

inline const char* to_string(ErrorModel m) {
  return m == ErrorModel::kNonOverlapping ? "nonoverlap" : "overlap";
}

inline std::optional<ErrorModel> error_model_from_string(const std::string& s) {
  if (s == "nonoverlap") return ErrorModel::kNonOverlapping;
  if (s == "overlap") return ErrorModel::kOverlapping;
  return std::nullopt;
}

}  // namespace psmc
