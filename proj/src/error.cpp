#include "twinspec/error.hpp"

namespace twinspec {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::EndpointIsRoot: return "EndpointIsRoot";
    case ErrorCode::NotSquareFree: return "NotSquareFree";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidEdge: return "InvalidEdge";
    case ErrorCode::InvalidSequence: return "InvalidSequence";
    case ErrorCode::LabelOutOfRange: return "LabelOutOfRange";
    case ErrorCode::EqualLabels: return "EqualLabels";
    case ErrorCode::NotTwins: return "NotTwins";
    case ErrorCode::NonRealRoots: return "NonRealRoots";
    case ErrorCode::NotIsolating: return "NotIsolating";
    case ErrorCode::DerivativeVanishes: return "DerivativeVanishes";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::RemovedEigenvalueMissing: return "RemovedEigenvalueMissing";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::FixtureMissing: return "FixtureMissing";
    case ErrorCode::NoMatch: return "NoMatch";
  }
  return "Unknown";
}

}  // namespace twinspec
