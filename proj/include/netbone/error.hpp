#pragma once

#include <stdexcept>
#include <string>

namespace netbone {

// Failure categories raised by parsing, validation, and the verification
// operations. Carried alongside the message so callers can branch on the
// condition instead of matching strings.
enum class ErrorCode {
  MalformedLine,
  NonPositiveWeight,
  SelfLoop,
  DuplicateEdge,
  NoSuchNode,
  UnknownStructure,
  MapNotBijective,
  MonoidAxiomViolation,
  UnsupportedAggregator,
  UnsupportedPair,
  DirectedInput,
  UndirectedInput,
  NotACycle,
  TooLarge,
  BudgetExhausted,
  InvalidArgument,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace netbone
