#pragma once

#include <stdexcept>
#include <string>

namespace evidec {

enum class ErrorCode {
    EmptyFocal,
    MassSumViolation,
    UnknownElement,
    NonPositiveMass,
    NoSingletonMass,
    MissingRho,
    SchemaError,
    EmptyOutcome,
    TooLarge,
    InvalidArgument,
};

const char* to_string(ErrorCode code);

/// All validation failures throw this; `code` names the violated invariant.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace evidec
