#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gumbel {

/// Failure categories surfaced by the library. The CLI maps these onto exit codes.
enum class Errc {
  // input handling
  ParseError,
  EmptyInput,
  NonPositiveCoordinate,
  DuplicateSample,
  SwappedDuplicate,
  // numerical domain
  InvalidArgument,
  InvalidTheta,
  NonPositiveBracket,
  DenominatorZero,
  // algebra
  ZeroPolynomial,
  ConstantPolynomial,
  DivisionByZero,
  // fixtures and internal consistency
  UnrealizableRoots,
  ValidationCollision,
  BoundViolation,
  InternalDisagreement,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), detail_(what) {}

  Errc code() const noexcept { return code_; }
  /// Message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

  /// True for the error kinds raised by dataset parsing and validation.
  bool is_input_error() const noexcept {
    switch (code_) {
      case Errc::ParseError:
      case Errc::EmptyInput:
      case Errc::NonPositiveCoordinate:
      case Errc::DuplicateSample:
      case Errc::SwappedDuplicate:
      case Errc::InvalidArgument:
      case Errc::InvalidTheta:
        return true;
      default:
        return false;
    }
  }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace gumbel
