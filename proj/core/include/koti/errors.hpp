#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace koti {

enum class ErrorKind {
  EmptySpace,
  DuplicateOutcome,
  UnknownOutcome,
  SpaceMismatch,
  UnboundAtom,
  EmptySupport,
  TableLengthMismatch,
  CapacityExceeded,
  LexError,
  ParseError,
  DuplicateName,
  UseBeforeDecl,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace koti
