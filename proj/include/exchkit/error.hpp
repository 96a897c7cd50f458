#pragma once

#include <stdexcept>
#include <string>

namespace exchkit {

enum class ErrorCode {
  NonNormalized,
  MixedArity,
  ArityNotOne,
  ArityMismatch,
  KOutOfRange,
  EmptyTuple,
  MissingDirectingMeasure,
  TooLargeToEnumerate,
  BlackBoxLaw,
  NotMultiExchangeable,
  InconsistentFamily,
  ConfigInvalid,
  IoFailure,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

/// Library-wide exception. `code()` identifies the contract violation and
/// drives the CLI exit-code mapping.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] void throw_error(ErrorCode code, const std::string& message);

} // namespace exchkit
