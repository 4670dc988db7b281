#pragma once

#include <stdexcept>
#include <string>

namespace lrc {

enum class ErrorCode {
    NotPrimePower,
    ReducibleModulus,
    InvalidArgument,
    LengthMismatch,
    RankDeficient,
    EmptySupport,
    BudgetExceeded,
    InvalidParams,
    FieldTooSmall,
    FieldMismatch,
    DeltaExceedsD,
    InfeasibleDelta,
    InfeasibleParams,
    ConstructionFailed,
    TooManyLocalErasures,
    NoGroup,
    InvalidProfile,
    ParseError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace lrc
