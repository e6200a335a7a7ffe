#pragma once

#include <stdexcept>
#include <string>

namespace unilab {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  SpaceMismatch,
  IndexOutOfRange,
  NotReflexive,
  NotReflexiveSymmetric,
  NotEquivalence,
  InvalidPartition,
  ShapeMismatch,
  InvalidSemiMetric,
  InexactPower,
  MapOutOfRange,
  EmptyList,
  EmptySubset,
  InvalidBase,
  InvalidSubbase,
  SpaceTooLargeForEnumeration,
  ProductTooLarge,
  NotOpen,
  NotContained,
  ZeroInput,
  DuplicateSample,
  DimensionMismatch,
  InvalidGroup,
  NotInvariant,
  NotSubgroup,
  InvalidFilterBase,
  NoSquareRoot,
  NotConjugationCompatible,
  UnknownSuite,
};

const char* error_name(ErrorCode code);

class UnilabError : public std::runtime_error {
 public:
  UnilabError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw UnilabError(code, message);
}

}  // namespace unilab
