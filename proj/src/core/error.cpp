#include "error.hpp"

namespace failnet {

const char *error_code_name(ErrorCode code) {
  switch (code) {
  case ErrorCode::DuplicateId:
    return "duplicate_id";
  case ErrorCode::MalformedElement:
    return "malformed_element";
  case ErrorCode::UnknownEndpoint:
    return "unknown_endpoint";
  case ErrorCode::KindConstraintViolated:
    return "kind_constraint_violated";
  case ErrorCode::DuplicateLink:
    return "duplicate_link";
  case ErrorCode::CycleIntroduced:
    return "cycle_introduced";
  case ErrorCode::UnknownElement:
    return "unknown_element";
  case ErrorCode::WrongKind:
    return "wrong_kind";
  case ErrorCode::DuplicateAlias:
    return "duplicate_alias";
  case ErrorCode::InvalidScenario:
    return "invalid_scenario";
  case ErrorCode::EmptyText:
    return "empty_text";
  case ErrorCode::MissingCatalog:
    return "missing_catalog";
  case ErrorCode::InvalidWeights:
    return "invalid_weights";
  case ErrorCode::ReportMismatch:
    return "report_mismatch";
  case ErrorCode::AlreadyInitialized:
    return "already_initialized";
  case ErrorCode::MissingInput:
    return "missing_input";
  case ErrorCode::FormatError:
    return "format_error";
  case ErrorCode::IoError:
    return "io_error";
  case ErrorCode::Locked:
    return "locked";
  case ErrorCode::Internal:
    return "internal";
  }
  return "internal";
}

ErrorCategory error_category(ErrorCode code) {
  switch (code) {
  case ErrorCode::DuplicateId:
  case ErrorCode::MalformedElement:
  case ErrorCode::UnknownEndpoint:
  case ErrorCode::KindConstraintViolated:
  case ErrorCode::DuplicateLink:
  case ErrorCode::CycleIntroduced:
  case ErrorCode::UnknownElement:
  case ErrorCode::WrongKind:
  case ErrorCode::DuplicateAlias:
  case ErrorCode::InvalidScenario:
  case ErrorCode::EmptyText:
  case ErrorCode::MissingCatalog:
  case ErrorCode::InvalidWeights:
  case ErrorCode::ReportMismatch:
  case ErrorCode::AlreadyInitialized:
    return ErrorCategory::Validation;
  case ErrorCode::MissingInput:
  case ErrorCode::FormatError:
    return ErrorCategory::Format;
  case ErrorCode::IoError:
  case ErrorCode::Locked:
  case ErrorCode::Internal:
    return ErrorCategory::Internal;
  }
  return ErrorCategory::Internal;
}

} // namespace failnet
