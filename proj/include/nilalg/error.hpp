#pragma once

#include <stdexcept>
#include <string>

namespace nilalg {

enum class ErrorKind {
  Parse,
  TowerOverflow,
  DivisionByZero,
  Dimension,
  Shape,
  Precondition,
  Validation,
  Parameter,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::TowerOverflow: return "tower-overflow";
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::Dimension: return "dimension";
    case ErrorKind::Shape: return "shape";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::Parameter: return "parameter";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can report it as a structured entry.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace nilalg
