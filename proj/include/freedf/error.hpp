#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace freedf {

/// Machine-readable failure categories surfaced by the library and the CLI.
enum class ErrorCode {
  EmptyInput,
  BadSyntax,
  SizeMismatch,
  BadSubset,
  BadTuple,
  OrderTooLarge,
  UnknownCategory,
  NotInCategory,
  NotInPoset,
  NotComparable,
  SingularGram,
  InvalidDimension,
  OrderExceeded,
  KindMismatch,
  DenseTooLarge,
  NotKernelRepresentable,
  IncompleteTable,
  NotInvariant,
  MissingLowerOrder,
  IncompleteRestriction,
  UnsupportedCategory,
  SchemaError,
  BadRational,
  IoError,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace freedf
