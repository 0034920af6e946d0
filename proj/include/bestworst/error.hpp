#pragma once

#include <stdexcept>
#include <string>

namespace bestworst {

enum class ErrorCode {
  NegativeWeight,
  TooFewCandidates,
  OutOfRange,
  SizeMismatch,
  InvalidTarget,
  NotConvergent,
  NotNonconvergent,
  WrongRegime,
  InfeasibleConfig,
  EpsilonOutOfRange,
  InternalInconsistency,
  Malformed,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bestworst
