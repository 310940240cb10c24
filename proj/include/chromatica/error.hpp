#pragma once

#include <stdexcept>
#include <string>

namespace chromatica {

enum class ErrorCode {
    InvalidArgument,
    Parse,
    Io,
    TooLarge,
    NotPrime,
    NonDivisible,
    EdgeAbsent,
    InvalidEdge,
    HypothesisViolated,
    NotIsomorphicUnderMap,
    Domain,
    LineAlreadyPresent,
    EmptyArrangement,
    NonIntegral,
    Internal,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure in the library surfaces as this exception; the C API maps
// code() onto its status enum.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace chromatica
