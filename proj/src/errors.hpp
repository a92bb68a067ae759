#pragma once

#include <stdexcept>
#include <string>

namespace ttr {

enum class ErrorCode {
    Parse,
    NotFiniteDimensional,
    NonAdmissible,
    BadArgument,
    AlgebraMismatch,
    NotPresilting,
    NotMinimal,
    SupportViolation,
    MutationInvariantViolation,
    DecompositionFailure,
    DimCMismatch,
    IncompleteInterval,
    IncompleteGraph,
    CapZero,
    Internal,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, ErrorCode code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

}  // namespace ttr
