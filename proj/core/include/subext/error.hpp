#pragma once

#include <stdexcept>
#include <string>

namespace subext {

enum class ErrorCode {
    ParseError,
    BadSemigroup,
    NotMPrimary,
    FieldTooLarge,
    UnknownScenario,
    InfiniteLength,
    ResourceBudget,
    StabilizationBudget,
    NoReductionFound,
    NotUlrich,
    NotCM,
    WrongFamily,
    Regular,
    NoNZD,
    LiftFailure,
    DimensionMismatch,
    InvalidArgument,
    Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

// Internal consistency check; violations are bugs, not user errors.
inline void check(bool cond, const char* what) {
    if (!cond) {
        throw Error(ErrorCode::Internal, what);
    }
}

} // namespace subext
