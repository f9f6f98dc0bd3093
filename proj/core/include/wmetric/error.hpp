#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wmetric {

enum class ErrorCode {
  MalformedTable,
  MalformedMatrix,
  NotContinuousAtZero,
  MixedInstances,
  NotAnEmbedding,
  DifferentSpaces,
  NotNonExpanding,
  BudgetTooSmall,
  WrongCoinitiality,
  InvalidChain,
  DifferentTrees,
  NotCofinal,
  Stuck,
  HeightMismatch,
  InvalidNode,
  IncoherentPrefix,
  InvalidArgument,
  Unresolvable,
  Parse,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `witness()` carries the offending
/// elements, points or indices (rendered as text) when the error has one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<std::string> witness = {});

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<std::string> witness_;
};

/// Parse failures keep the location so the CLI can point at the line.
class ParseError : public Error {
 public:
  ParseError(std::string file, std::size_t line, std::string text, const std::string& message);

  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }
  const std::string& text() const noexcept { return text_; }

 private:
  std::string file_;
  std::size_t line_;
  std::string text_;
};

}  // namespace wmetric
