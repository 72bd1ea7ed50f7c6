#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace facelat {

enum class ErrorKind {
  ZeroNormal,
  DuplicateHyperplane,
  BasePointOnHyperplane,
  DimensionMismatch,
  NotAntisymmetric,
  NotTransitive,
  NotALattice,
  NotABijection,
  NotComparable,
  NotCoversOfZ,
  InternalInconsistency,
  UnsupportedFamily,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind so
/// callers (and the CLI exit-code mapping) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroNormal: return "ZeroNormal";
    case ErrorKind::DuplicateHyperplane: return "DuplicateHyperplane";
    case ErrorKind::BasePointOnHyperplane: return "BasePointOnHyperplane";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorKind::NotTransitive: return "NotTransitive";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotABijection: return "NotABijection";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::NotCoversOfZ: return "NotCoversOfZ";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace facelat
