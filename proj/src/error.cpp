#include "sic/error.hpp"

namespace sic {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrimePower: return "NotPrimePower";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InvalidDimension: return "InvalidDimension";
    case ErrorKind::InvalidShortening: return "InvalidShortening";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::NotConstantWeight: return "NotConstantWeight";
    case ErrorKind::TooFewColumns: return "TooFewColumns";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::UnknownKind: return "UnknownKind";
    case ErrorKind::MalformedFile: return "MalformedFile";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

}  // namespace sic
