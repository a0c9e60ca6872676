#include "orbitq/error.hpp"

namespace orbitq {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnsupportedKind: return "UnsupportedKind";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotDominant: return "NotDominant";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::WrongRealForm: return "WrongRealForm";
    case ErrorCode::DatumMismatch: return "DatumMismatch";
    case ErrorCode::ParityMismatch: return "ParityMismatch";
    case ErrorCode::NotInP: return "NotInP";
    case ErrorCode::SingularElement: return "SingularElement";
    case ErrorCode::UnsupportedAlgebra: return "UnsupportedAlgebra";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace orbitq
