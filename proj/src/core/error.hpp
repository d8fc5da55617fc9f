#pragma once

#include <stdexcept>
#include <string>

namespace failnet {

enum class ErrorCode {
  DuplicateId,
  MalformedElement,
  UnknownEndpoint,
  KindConstraintViolated,
  DuplicateLink,
  CycleIntroduced,
  UnknownElement,
  WrongKind,
  DuplicateAlias,
  InvalidScenario,
  EmptyText,
  MissingCatalog,
  InvalidWeights,
  ReportMismatch,
  AlreadyInitialized,
  MissingInput,
  FormatError,
  IoError,
  Locked,
  Internal,
};

// Categories map 1:1 onto CLI exit codes / C API statuses.
enum class ErrorCategory { Validation = 1, Format = 2, Internal = 3 };

const char *error_code_name(ErrorCode code);
ErrorCategory error_category(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }
  ErrorCategory category() const { return error_category(code_); }

private:
  ErrorCode code_;
};

} // namespace failnet
