#include "latdiss/error.hpp"

namespace latdiss {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::NotStrictlyConvex: return "NotStrictlyConvex";
    case ErrorCode::RepeatedVertex: return "RepeatedVertex";
    case ErrorCode::InvalidLetter: return "InvalidLetter";
    case ErrorCode::WordTooShort: return "WordTooShort";
    case ErrorCode::IllegalStep: return "IllegalStep";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::InvalidTriangulation: return "InvalidTriangulation";
    case ErrorCode::NotIntegerArea: return "NotIntegerArea";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::OutsideTriangle: return "OutsideTriangle";
    case ErrorCode::IsVertex: return "IsVertex";
    case ErrorCode::OddArea: return "OddArea";
    case ErrorCode::InvalidDissection: return "InvalidDissection";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::TheoremViolation: return "TheoremViolation";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace latdiss
