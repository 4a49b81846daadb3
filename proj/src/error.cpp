#include <eigspace/error.hpp>

namespace eigspace {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::DegreeTooLow: return "DegreeTooLow";
    case ErrorCode::DuplicateAbscissa: return "DuplicateAbscissa";
    case ErrorCode::InsufficientSamples: return "InsufficientSamples";
    case ErrorCode::BadBudget: return "BadBudget";
    case ErrorCode::DuplicateLambda: return "DuplicateLambda";
    case ErrorCode::InfeasibleConfig: return "InfeasibleConfig";
    case ErrorCode::NotStrictlyUpper: return "NotStrictlyUpper";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::MixedSizes: return "MixedSizes";
    case ErrorCode::EmptyAmbient: return "EmptyAmbient";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotBorelInvariant: return "NotBorelInvariant";
    case ErrorCode::DegenerateFamily: return "DegenerateFamily";
    case ErrorCode::NotPhiStable: return "NotPhiStable";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::DegenerateLambdas: return "DegenerateLambdas";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace eigspace
