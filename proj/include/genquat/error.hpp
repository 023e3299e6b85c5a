#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace genquat {

enum class ErrorKind {
  kDegenerateSignature,
  kNonInvertible,
  kNonPositiveNorm,
  kNotUnit,
  kNullVectorPart,
  kInvalidAxis,
  kUnsupportedSignature,
};

// Stable identifier used in CLI error objects.
std::string_view error_name(ErrorKind kind);

// Raised by every operation whose mathematical precondition fails.
class DomainError : public std::domain_error {
 public:
  DomainError(ErrorKind kind, const std::string& detail)
      : std::domain_error(detail), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace genquat
