#include "chromatica/error.hpp"

namespace chromatica {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::Parse: return "ParseError";
        case ErrorCode::Io: return "IoError";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::NonDivisible: return "NonDivisible";
        case ErrorCode::EdgeAbsent: return "EdgeAbsent";
        case ErrorCode::InvalidEdge: return "InvalidEdge";
        case ErrorCode::HypothesisViolated: return "HypothesisViolated";
        case ErrorCode::NotIsomorphicUnderMap: return "NotIsomorphicUnderMap";
        case ErrorCode::Domain: return "DomainError";
        case ErrorCode::LineAlreadyPresent: return "LineAlreadyPresent";
        case ErrorCode::EmptyArrangement: return "EmptyArrangement";
        case ErrorCode::NonIntegral: return "NonIntegral";
        case ErrorCode::Internal: return "InternalError";
    }
    return "Unknown";
}

}  // namespace chromatica
