#include "almost_fourier/error.hpp"

namespace almost_fourier {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::ElementNotInGroup: return "ElementNotInGroup";
    case ErrorKind::NotCentral: return "NotCentral";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::InvalidCharacter: return "InvalidCharacter";
    case ErrorKind::MissingCell: return "MissingCell";
    case ErrorKind::InvalidDatum: return "InvalidDatum";
    case ErrorKind::CharacterTableMissing: return "CharacterTableMissing";
    case ErrorKind::NoPositiveBasis: return "NoPositiveBasis";
    case ErrorKind::NonUnique: return "NonUnique";
    case ErrorKind::NonRealCone: return "NonRealCone";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::RelationFailure: return "RelationFailure";
    case ErrorKind::StabilityFailure: return "StabilityFailure";
    case ErrorKind::DecompositionFailure: return "DecompositionFailure";
    case ErrorKind::ConsistencyFailure: return "ConsistencyFailure";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::NotInV: return "NotInV";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
  }
  return "Unknown";
}

}  // namespace almost_fourier
