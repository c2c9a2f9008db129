#pragma once

#include <stdexcept>
#include <string>

namespace regge {

// Broad failure classes; the CLI maps these onto its exit codes
// (input error = 2, precondition violation = 3, solver failure = 4).
enum class ErrorKind { Input, Precondition, Solver };

enum class ErrorCode {
  ParseError,
  NonManifoldFace,
  Disconnected,
  DegenerateTet,
  DegenerateTriangle,
  PyramidInfeasible,
  NotASphere,
  IllConditioned,
  StarPointInvalid,
  DegenerateTwist,
  NotFlat,
  FlipLoop,
  InitFailed,
  JacobianSingular,
  StepUnderflow,
  EmbeddingInconsistent,
  NonSimplicialFlip,
  DegeneratesToPolygon,
  PreconditionViolation,
};

const char* error_code_name(ErrorCode code);
ErrorKind error_kind(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message, long index = -1);

  ErrorCode code() const noexcept { return code_; }
  ErrorKind kind() const noexcept { return error_kind(code_); }
  // Index of the offending entity (tet, triangle, edge, ...) when known.
  long index() const noexcept { return index_; }

private:
  ErrorCode code_;
  long index_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message, long index = -1);

} // namespace regge
