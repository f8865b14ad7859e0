#pragma once

#include <stdexcept>
#include <string>

namespace exclo {

enum class ErrorCode {
  invalid_argument,
  degenerate_scenario,
  parity_violation,
  scope_exceeded,
  cap_exceeded,
  budget_exceeded,
  parse_error,
  non_bipartite,
};

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorCode::invalid_argument, what);
}

}  // namespace exclo
