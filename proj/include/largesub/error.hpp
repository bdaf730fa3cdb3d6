#ifndef LARGESUB_ERROR_HPP
#define LARGESUB_ERROR_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace largesub {

enum class ErrorKind {
  NotAGroup,
  OrderCapExceeded,
  UnknownName,
  NotCentral,
  NotIsomorphism,
  NotNormal,
  NotClosed,
  NotAbelian,
  TrivialGroup,
  NotSoluble,
  ClosureNotDeclared,
  UnknownClass,
  NotAFittingClassWitness,
  NotAFormationWitness,
  ClosureFlagsMissing,
  FlagsMissing,
  HypothesisFailed,
  BadBound,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` is stable and is what
/// callers (and the CLI exit-code mapping) switch on; the message is for
/// humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  // Associativity failures carry (x, y, z) with (xy)z != x(yz); identity or
  // inverse failures carry the offending element in slot 0.
  const std::optional<std::array<std::uint32_t, 3>>& witness() const noexcept {
    return witness_;
  }
  Error& with_witness(std::array<std::uint32_t, 3> w) {
    witness_ = w;
    return *this;
  }

 private:
  ErrorKind kind_;
  std::optional<std::array<std::uint32_t, 3>> witness_;
};

}  // namespace largesub

#endif  // LARGESUB_ERROR_HPP
