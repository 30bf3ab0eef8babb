#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace conductor {

enum class ErrorCode {
  kPrecondition,
  kSingularMatrix,
  kDimensionMismatch,
  kInvalidGraph,
  kNegativeUnipotentRank,
  kUnknownType,
  kNotNegativeDefinite,
  kInvalidResolution,
  kInconsistentDims,
  kInvalidFiltration,
  kInvalidCover,
  kRHMismatch,
  kNegativeSwan,
  kNegativeConductor,
  kMissingTerm,
  kMissingOrdinaryData,
  kSchemaError,
  kParseError,
  kInternal,
};

std::string_view error_code_name(ErrorCode code);

// Every failure raised by the library carries a machine-readable code; the
// CLI turns these into structured error reports.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Validation rules report problems as data rather than throwing.
struct Diagnostic {
  std::string rule;
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

using Diagnostics = std::vector<Diagnostic>;

inline bool has_rule(const Diagnostics& diags, std::string_view rule) {
  for (const auto& d : diags) {
    if (d.rule == rule) return true;
  }
  return false;
}

}  // namespace conductor
