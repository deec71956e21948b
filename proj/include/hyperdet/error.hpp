#ifndef HYPERDET_ERROR_HPP
#define HYPERDET_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperdet {

enum class ErrorKind {
  NotDivisible,
  MissingVariable,
  BothConstant,
  NotSymmetric,
  IndexOutOfRange,
  EmptySelection,
  SizeGuard,
  SizeMismatch,
  NotInjective,
  RangeViolation,
  WrongFormat,
  WrongShape,
  NotSquare,
  Singular,
  GrassmanFormat,
  Unsupported,
  CalibrationFailure,
  DegenerateSample,
  Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so that
/// front ends can map it to an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hyperdet

#endif  // HYPERDET_ERROR_HPP
