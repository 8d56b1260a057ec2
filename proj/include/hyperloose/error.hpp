#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperloose {

enum class ErrorKind {
  invalid_query,
  construction_failure,
  not_found,
  absorption_failure,
  budget_exceeded,
  invalid_composition,
  undefined,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_query: return "invalid-query";
    case ErrorKind::construction_failure: return "construction-failure";
    case ErrorKind::not_found: return "not-found";
    case ErrorKind::absorption_failure: return "absorption-failure";
    case ErrorKind::budget_exceeded: return "budget-exceeded";
    case ErrorKind::invalid_composition: return "invalid-composition";
    case ErrorKind::undefined: return "undefined";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace hyperloose
