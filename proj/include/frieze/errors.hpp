// errors.hpp
//
// Exception types thrown by the library. Everything derives from
// frieze::Error so callers (notably the CLI) can map the whole family to a
// single "domain error" exit path while tests match the precise type.
#pragma once

#include <stdexcept>
#include <string>

namespace frieze {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
  virtual const char* kind() const noexcept { return "Error"; }
};

#define FRIEZE_DEFINE_ERROR(Name)                                      \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(const std::string& what_arg) : Error(what_arg) {}    \
    const char* kind() const noexcept override { return #Name; }       \
  }

FRIEZE_DEFINE_ERROR(DivisionByZero);
FRIEZE_DEFINE_ERROR(NonPositiveEntry);
FRIEZE_DEFINE_ERROR(IndexOutOfRange);
FRIEZE_DEFINE_ERROR(NotAFrieze);
FRIEZE_DEFINE_ERROR(PeriodMismatch);
FRIEZE_DEFINE_ERROR(DegenerateQuadruple);
FRIEZE_DEFINE_ERROR(KOutOfRange);
FRIEZE_DEFINE_ERROR(CapExceeded);
FRIEZE_DEFINE_ERROR(InvalidLift);
FRIEZE_DEFINE_ERROR(BadAngles);
FRIEZE_DEFINE_ERROR(ClosureFailed);
FRIEZE_DEFINE_ERROR(InternalError);

#undef FRIEZE_DEFINE_ERROR

// NonClosing carries the monodromy product that failed to equal -Identity;
// the four entries are reported as exact strings so diagnostics stay lossless.
class NonClosing : public Error {
 public:
  NonClosing(const std::string& what_arg, std::string m00, std::string m01,
             std::string m10, std::string m11)
      : Error(what_arg), monodromy{std::move(m00), std::move(m01), std::move(m10), std::move(m11)} {}
  const char* kind() const noexcept override { return "NonClosing"; }

  std::string monodromy[4];  // row-major
};

}  // namespace frieze
