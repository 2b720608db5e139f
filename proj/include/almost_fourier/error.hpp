#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace almost_fourier {

enum class ErrorKind {
  NonSquare,
  DimensionMismatch,
  Parse,
  ElementNotInGroup,
  NotCentral,
  NotAGroup,
  InvalidCharacter,
  MissingCell,
  InvalidDatum,
  CharacterTableMissing,
  NoPositiveBasis,
  NonUnique,
  NonRealCone,
  SizeLimit,
  BadParams,
  RelationFailure,
  StabilityFailure,
  DecompositionFailure,
  ConsistencyFailure,
  AlgebraMismatch,
  NotInV,
  BadIndex,
  UnknownLabel,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to a report status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace almost_fourier
