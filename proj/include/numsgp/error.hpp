#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace numsgp {

using Int = std::int64_t;

enum class ErrorKind {
  EmptyInput,
  InvalidInput,
  GcdNotOne,
  NotMember,
  EnumerationOverflow,
  PrecondFailed,
  NotPseudoSymmetric,
  NoCanonicalForm,
  PatternNotFound,
  InvalidParams,
  NotInIdeal,
  Overflow,
};

const char* to_string(ErrorKind kind);

/// Single exception type for every library failure; `kind()` tells callers
/// (and the CLI exit-code mapping) which contract was broken.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, Int detail = 0)
      : std::runtime_error(what), kind_(kind), detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// Extra integer payload, e.g. the offending gcd for GcdNotOne.
  Int detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  Int detail_;
};

// Checked arithmetic; every quantity in the library is an exact integer.
Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

}  // namespace numsgp
