#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hgs {

enum class ErrorCode {
  invalid_permutation,
  degree_mismatch,
  degree_cap,
  order_cap_exceeded,
  cap,
  bad_params,
  not_order_p3,
  search_exhausted,
  infeasible,
  divisibility_violation,
  parse_error,
  not_transitive,
  bad_spec,
  unknown_record,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_permutation: return "INVALID_PERMUTATION";
    case ErrorCode::degree_mismatch: return "DEGREE_MISMATCH";
    case ErrorCode::degree_cap: return "DEGREE_CAP";
    case ErrorCode::order_cap_exceeded: return "ORDER_CAP_EXCEEDED";
    case ErrorCode::cap: return "CAP";
    case ErrorCode::bad_params: return "BAD_PARAMS";
    case ErrorCode::not_order_p3: return "NOT_ORDER_P3";
    case ErrorCode::search_exhausted: return "SEARCH_EXHAUSTED";
    case ErrorCode::infeasible: return "INFEASIBLE";
    case ErrorCode::divisibility_violation: return "DIVISIBILITY_VIOLATION";
    case ErrorCode::parse_error: return "PARSE_ERROR";
    case ErrorCode::not_transitive: return "NOT_TRANSITIVE";
    case ErrorCode::bad_spec: return "BAD_SPEC";
    case ErrorCode::unknown_record: return "UNKNOWN_RECORD";
  }
  return "UNKNOWN";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// True when the code means a configured cap or budget was hit rather than bad input.
constexpr bool is_cap_error(ErrorCode code) noexcept {
  return code == ErrorCode::order_cap_exceeded || code == ErrorCode::cap ||
         code == ErrorCode::degree_cap || code == ErrorCode::infeasible;
}

}  // namespace hgs
