#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace escobar {

enum class ErrorCode {
  kInvalidParameter,
  kInvalidGeometry,
  kNotApplicable,
  kConstructionFailure,
  kBudgetExceeded,
  kParse,
};

const char* to_string(ErrorCode code);

/// Exception type thrown by every escobar module.
///
/// Geometry errors carry the index of the offending boundary edge when one
/// can be identified; budget errors carry the estimated number of tuple
/// evaluations that would have been needed.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> edge_index = std::nullopt)
      : std::runtime_error(message), code_(code), edge_index_(edge_index) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> edge_index() const noexcept { return edge_index_; }

  double required_evaluations() const noexcept { return required_evaluations_; }
  Error& with_required_evaluations(double n) {
    required_evaluations_ = n;
    return *this;
  }

 private:
  ErrorCode code_;
  std::optional<std::size_t> edge_index_;
  double required_evaluations_ = 0.0;
};

}  // namespace escobar
