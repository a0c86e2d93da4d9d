#pragma once

#include <stdexcept>
#include <string>

namespace c2qhr {

/// Failure categories shared by every module.
enum class ErrorKind {
  BadDomain,
  NonConvergent,
  BadArgument,
  BranchAmbiguity,
  NotInGamma0,
  SearchExhausted,
  NearSingularity,
  DivideByZero,
  UnknownSuite,
};

const char* to_string(ErrorKind kind);

/// Exception carrying an ErrorKind; what() starts with the kind name.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace c2qhr
