#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace espdag {

enum class ErrorKind {
  CycleDetected,
  DuplicateArc,
  SelfLoop,
  IndexOutOfRange,
  DimensionMismatch,
  KNotTwo,
  NotAPath,
  TooLarge,
  MalformedNetwork,
  ParseError,
  ValidationError,
  NonUniformWeightsWithUnitFlag,
  TerminalError,
  NotRegular,
  DegreeTooSmall,
  ShapeError,
  CoverageError,
  InfiniteCostAssignment,
  InfeasibleSpec,
  RetryLimit,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by DAG validation; carries one witness cycle as a closed vertex
/// sequence (first == last).
class CycleError : public Error {
 public:
  CycleError(const std::string& message, std::vector<int> cycle)
      : Error(ErrorKind::CycleDetected, message), cycle_(std::move(cycle)) {}

  const std::vector<int>& cycle() const { return cycle_; }

 private:
  std::vector<int> cycle_;
};

}  // namespace espdag
