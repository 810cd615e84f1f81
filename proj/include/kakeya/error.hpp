#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kakeya {

enum class ErrorKind {
  NotPrime,
  OrderTooLarge,
  InvalidDegree,
  InvalidElement,
  DivisionByZero,
  InvalidConfig,
  TooLarge,
  IncompleteSearch,
  InternalInconsistency,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by every module of the library. The CLI maps the
/// kind onto its exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace kakeya
