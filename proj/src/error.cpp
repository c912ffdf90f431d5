#include "gumbel/error.hpp"

namespace gumbel {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::NonPositiveCoordinate: return "NonPositiveCoordinate";
    case Errc::DuplicateSample: return "DuplicateSample";
    case Errc::SwappedDuplicate: return "SwappedDuplicate";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InvalidTheta: return "InvalidTheta";
    case Errc::NonPositiveBracket: return "NonPositiveBracket";
    case Errc::DenominatorZero: return "DenominatorZero";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::ConstantPolynomial: return "ConstantPolynomial";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::UnrealizableRoots: return "UnrealizableRoots";
    case Errc::ValidationCollision: return "ValidationCollision";
    case Errc::BoundViolation: return "BoundViolation";
    case Errc::InternalDisagreement: return "InternalDisagreement";
  }
  return "UnknownError";
}

}  // namespace gumbel
