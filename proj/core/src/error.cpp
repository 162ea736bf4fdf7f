#include "escobar/error.hpp"

namespace escobar {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidParameter:
      return "invalid-parameter";
    case ErrorCode::kInvalidGeometry:
      return "invalid-geometry";
    case ErrorCode::kNotApplicable:
      return "not-applicable";
    case ErrorCode::kConstructionFailure:
      return "construction-failure";
    case ErrorCode::kBudgetExceeded:
      return "budget-exceeded";
    case ErrorCode::kParse:
      return "parse-error";
  }
  return "unknown";
}

}  // namespace escobar
