#pragma once

#include <stdexcept>
#include <string>

namespace pwell {

enum class ErrorKind {
  invalid_argument,
  no_sign_change,
  max_iterations,
  bound_unavailable,
  non_convergent,
  divergent_integral,
  bracket_failure,
  precision_exhausted,
  pole,
  out_of_range,
  not_unimodal,
  step_not_found,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI exit-code mapping) can dispatch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::invalid_argument, what);
}

}  // namespace pwell
