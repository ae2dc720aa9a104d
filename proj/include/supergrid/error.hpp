#pragma once

#include <stdexcept>
#include <string>

namespace supergrid {

enum class ErrorCode {
  VertexNotInGraph,
  NoInsertionEdge,
  NoConcatenationEdge,
  NoBridgeEdges,
  NoSharedVertex,
  NoPivotEdge,
  PreconditionViolated,
  AlreadyHamiltonian,
  ExtensionStuck,
  SizeBoundExceeded,
  BoxTooLarge,
  GenerationBudgetExhausted,
  InvalidCharacter,
  ParseError,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::VertexNotInGraph: return "VertexNotInGraph";
    case ErrorCode::NoInsertionEdge: return "NoInsertionEdge";
    case ErrorCode::NoConcatenationEdge: return "NoConcatenationEdge";
    case ErrorCode::NoBridgeEdges: return "NoBridgeEdges";
    case ErrorCode::NoSharedVertex: return "NoSharedVertex";
    case ErrorCode::NoPivotEdge: return "NoPivotEdge";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::AlreadyHamiltonian: return "AlreadyHamiltonian";
    case ErrorCode::ExtensionStuck: return "ExtensionStuck";
    case ErrorCode::SizeBoundExceeded: return "SizeBoundExceeded";
    case ErrorCode::BoxTooLarge: return "BoxTooLarge";
    case ErrorCode::GenerationBudgetExhausted: return "GenerationBudgetExhausted";
    case ErrorCode::InvalidCharacter: return "InvalidCharacter";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Base exception for every recoverable failure in the library. The code
/// identifies the failure kind; the message is meant for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace supergrid
