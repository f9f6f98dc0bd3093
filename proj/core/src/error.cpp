#include "wmetric/error.hpp"

#include <utility>

namespace wmetric {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedTable: return "MalformedTable";
    case ErrorCode::MalformedMatrix: return "MalformedMatrix";
    case ErrorCode::NotContinuousAtZero: return "NotContinuousAtZero";
    case ErrorCode::MixedInstances: return "MixedInstances";
    case ErrorCode::NotAnEmbedding: return "NotAnEmbedding";
    case ErrorCode::DifferentSpaces: return "DifferentSpaces";
    case ErrorCode::NotNonExpanding: return "NotNonExpanding";
    case ErrorCode::BudgetTooSmall: return "BudgetTooSmall";
    case ErrorCode::WrongCoinitiality: return "WrongCoinitiality";
    case ErrorCode::InvalidChain: return "InvalidChain";
    case ErrorCode::DifferentTrees: return "DifferentTrees";
    case ErrorCode::NotCofinal: return "NotCofinal";
    case ErrorCode::Stuck: return "Stuck";
    case ErrorCode::HeightMismatch: return "HeightMismatch";
    case ErrorCode::InvalidNode: return "InvalidNode";
    case ErrorCode::IncoherentPrefix: return "IncoherentPrefix";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Unresolvable: return "Unresolvable";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::vector<std::string> witness)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      witness_(std::move(witness)) {}

ParseError::ParseError(std::string file, std::size_t line, std::string text,
                       const std::string& message)
    : Error(ErrorCode::Parse,
            file + ":" + std::to_string(line) + ": " + message + "\n  > " + text),
      file_(std::move(file)),
      line_(line),
      text_(std::move(text)) {}

}  // namespace wmetric
