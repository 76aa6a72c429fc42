#pragma once

#include <stdexcept>
#include <string>

namespace resgraph {

/// Machine-readable failure codes. Codes in the "internal" band signal a
/// violated cross-check between two independently computed witnesses; they
/// are never expected on any input and indicate a bug, not bad data.
enum class ErrorCode {
    // input / construction
    DuplicateVertex,
    UnknownEndpoint,
    SelfLoop,
    DuplicateEdge,
    Disconnected,
    NonPositiveWeight,
    DimensionMismatch,
    SyntaxError,
    CapExceeded,
    // domain preconditions
    NotNegativeDefinite,
    NotMinimalResolution,
    NotRational,
    NotAntiNef,
    NotStarShaped,
    NotQuotient,
    CyclicQuotient,
    GorensteinInput,
    WeightBelowTwo,
    NotCoprime,
    OutOfRange,
    DegreeNotPositive,
    // internal cross-check failures (bug signals)
    NonIntegralResult,
    InternalDisagreement,
    CriterionDisagreement,
    FormulaMismatch,
    CrossCheckMismatch,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::DuplicateVertex: return "DuplicateVertex";
        case ErrorCode::UnknownEndpoint: return "UnknownEndpoint";
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::NotNegativeDefinite: return "NotNegativeDefinite";
        case ErrorCode::NotMinimalResolution: return "NotMinimalResolution";
        case ErrorCode::NotRational: return "NotRational";
        case ErrorCode::NotAntiNef: return "NotAntiNef";
        case ErrorCode::NotStarShaped: return "NotStarShaped";
        case ErrorCode::NotQuotient: return "NotQuotient";
        case ErrorCode::CyclicQuotient: return "CyclicQuotient";
        case ErrorCode::GorensteinInput: return "GorensteinInput";
        case ErrorCode::WeightBelowTwo: return "WeightBelowTwo";
        case ErrorCode::NotCoprime: return "NotCoprime";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::DegreeNotPositive: return "DegreeNotPositive";
        case ErrorCode::NonIntegralResult: return "NonIntegralResult";
        case ErrorCode::InternalDisagreement: return "InternalDisagreement";
        case ErrorCode::CriterionDisagreement: return "CriterionDisagreement";
        case ErrorCode::FormulaMismatch: return "FormulaMismatch";
        case ErrorCode::CrossCheckMismatch: return "CrossCheckMismatch";
    }
    return "Unknown";
}

/// True for bug-signal codes: these map to CLI exit code 3.
inline bool is_internal_error(ErrorCode c) {
    switch (c) {
        case ErrorCode::NonIntegralResult:
        case ErrorCode::InternalDisagreement:
        case ErrorCode::CriterionDisagreement:
        case ErrorCode::FormulaMismatch:
        case ErrorCode::CrossCheckMismatch:
            return true;
        default:
            return false;
    }
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace resgraph
