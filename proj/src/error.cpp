#include "regge/error.hpp"

namespace regge {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonManifoldFace: return "NonManifoldFace";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::DegenerateTet: return "DegenerateTet";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::PyramidInfeasible: return "PyramidInfeasible";
    case ErrorCode::NotASphere: return "NotASphere";
    case ErrorCode::IllConditioned: return "IllConditioned";
    case ErrorCode::StarPointInvalid: return "StarPointInvalid";
    case ErrorCode::DegenerateTwist: return "DegenerateTwist";
    case ErrorCode::NotFlat: return "NotFlat";
    case ErrorCode::FlipLoop: return "FlipLoop";
    case ErrorCode::InitFailed: return "InitFailed";
    case ErrorCode::JacobianSingular: return "JacobianSingular";
    case ErrorCode::StepUnderflow: return "StepUnderflow";
    case ErrorCode::EmbeddingInconsistent: return "EmbeddingInconsistent";
    case ErrorCode::NonSimplicialFlip: return "NonSimplicialFlip";
    case ErrorCode::DegeneratesToPolygon: return "DegeneratesToPolygon";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
  }
  return "Unknown";
}

ErrorKind error_kind(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::NonManifoldFace:
    case ErrorCode::Disconnected:
    case ErrorCode::DegenerateTet:
    case ErrorCode::DegenerateTriangle:
    case ErrorCode::NotASphere:
      return ErrorKind::Input;
    case ErrorCode::PyramidInfeasible:
    case ErrorCode::StarPointInvalid:
    case ErrorCode::DegenerateTwist:
    case ErrorCode::NotFlat:
    case ErrorCode::PreconditionViolation:
      return ErrorKind::Precondition;
    case ErrorCode::IllConditioned:
    case ErrorCode::FlipLoop:
    case ErrorCode::InitFailed:
    case ErrorCode::JacobianSingular:
    case ErrorCode::StepUnderflow:
    case ErrorCode::EmbeddingInconsistent:
    case ErrorCode::NonSimplicialFlip:
    case ErrorCode::DegeneratesToPolygon:
      return ErrorKind::Solver;
  }
  return ErrorKind::Solver;
}

Error::Error(ErrorCode code, const std::string& message, long index)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code),
      index_(index) {}

void fail(ErrorCode code, const std::string& message, long index) {
  throw Error(code, message, index);
}

} // namespace regge
