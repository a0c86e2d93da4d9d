#include "c2qhr/errors.hpp"

namespace c2qhr {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadDomain: return "BadDomain";
    case ErrorKind::NonConvergent: return "NonConvergent";
    case ErrorKind::BadArgument: return "BadArgument";
    case ErrorKind::BranchAmbiguity: return "BranchAmbiguity";
    case ErrorKind::NotInGamma0: return "NotInGamma0";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::NearSingularity: return "NearSingularity";
    case ErrorKind::DivideByZero: return "DivideByZero";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace c2qhr
