#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cremona {

enum class ErrorKind {
  InvalidInput,
  DivisionByZero,
  FieldMismatch,
  Unsupported,
  RequiresFieldExtension,
  PreconditionFailed,
  NotInvolution,
  NonCommuting,
  WrongOrder,
  ClosureExceeded,
  ShapeError,
  SyntaxError,
  Internal,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind and the tag of the
/// module that raised it ("exactfield", "moebius", "birmap", ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string module, const std::string& message)
      : std::runtime_error(message), kind_(kind), module_(std::move(module)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& module() const noexcept { return module_; }

 private:
  ErrorKind kind_;
  std::string module_;
};

[[noreturn]] inline void fail(ErrorKind kind, std::string module, const std::string& message) {
  throw Error(kind, std::move(module), message);
}

}  // namespace cremona
