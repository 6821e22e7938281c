#include "bifrac/error.hpp"

namespace bifrac {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedTable: return "MalformedTable";
    case ErrorKind::NotAOneCell: return "NotAOneCell";
    case ErrorKind::NotAnObject: return "NotAnObject";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::NotAGroupoid: return "NotAGroupoid";
    case ErrorKind::CodomainMismatch: return "CodomainMismatch";
    case ErrorKind::BoundaryMismatch: return "BoundaryMismatch";
    case ErrorKind::CrossCheckFailure: return "CrossCheckFailure";
    case ErrorKind::Input: return "InputError";
  }
  return "Error";
}

}  // namespace bifrac
