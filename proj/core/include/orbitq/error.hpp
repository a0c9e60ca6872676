#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbitq {

enum class ErrorCode {
  UnsupportedKind,
  DimensionMismatch,
  NotDominant,
  NotRegular,
  WrongRealForm,
  DatumMismatch,
  ParityMismatch,
  NotInP,
  SingularElement,
  UnsupportedAlgebra,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
/// `field` is a JSON-pointer-like path to the offending input, when known.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string field = {})
      : std::runtime_error(message), code_(code), field_(std::move(field)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& field() const noexcept { return field_; }

 private:
  ErrorCode code_;
  std::string field_;
};

}  // namespace orbitq
