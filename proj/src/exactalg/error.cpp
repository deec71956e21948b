#include "hyperdet/error.hpp"

namespace hyperdet {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::MissingVariable: return "MissingVariable";
    case ErrorKind::BothConstant: return "BothConstant";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::EmptySelection: return "EmptySelection";
    case ErrorKind::SizeGuard: return "SizeGuard";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::NotInjective: return "NotInjective";
    case ErrorKind::RangeViolation: return "RangeViolation";
    case ErrorKind::WrongFormat: return "WrongFormat";
    case ErrorKind::WrongShape: return "WrongShape";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::GrassmanFormat: return "GrassmanFormat";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::CalibrationFailure: return "CalibrationFailure";
    case ErrorKind::DegenerateSample: return "DegenerateSample";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace hyperdet
