#include "largesub/error.hpp"

namespace largesub {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::NotCentral: return "NotCentral";
    case ErrorKind::NotIsomorphism: return "NotIsomorphism";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotAbelian: return "NotAbelian";
    case ErrorKind::TrivialGroup: return "TrivialGroup";
    case ErrorKind::NotSoluble: return "NotSoluble";
    case ErrorKind::ClosureNotDeclared: return "ClosureNotDeclared";
    case ErrorKind::UnknownClass: return "UnknownClass";
    case ErrorKind::NotAFittingClassWitness: return "NotAFittingClassWitness";
    case ErrorKind::NotAFormationWitness: return "NotAFormationWitness";
    case ErrorKind::ClosureFlagsMissing: return "ClosureFlagsMissing";
    case ErrorKind::FlagsMissing: return "FlagsMissing";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::BadBound: return "BadBound";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace largesub
