#pragma once

#include <stdexcept>
#include <string>

namespace ric {

// One code per failure mode exposed through the library surface; the C API
// maps these 1:1 onto ri_status values.
enum class ErrorCode {
    ok = 0,
    invalid_argument,
    non_hermitian_input,
    bad_factorization,
    dimension_mismatch,
    unequal_temperatures,
    domain_violation,
    division_by_zero,
    no_steady_state,
    diagonal_only,
    not_converged,
    ledger_violation,
    parse_error,
    validation_error,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ok: return "Ok";
        case ErrorCode::invalid_argument: return "InvalidArgument";
        case ErrorCode::non_hermitian_input: return "NonHermitianInput";
        case ErrorCode::bad_factorization: return "BadFactorization";
        case ErrorCode::dimension_mismatch: return "DimensionMismatch";
        case ErrorCode::unequal_temperatures: return "UnequalTemperatures";
        case ErrorCode::domain_violation: return "DomainViolation";
        case ErrorCode::division_by_zero: return "DivisionByZero";
        case ErrorCode::no_steady_state: return "NoSteadyState";
        case ErrorCode::diagonal_only: return "DiagonalOnly";
        case ErrorCode::not_converged: return "NotConverged";
        case ErrorCode::ledger_violation: return "LedgerViolation";
        case ErrorCode::parse_error: return "ParseError";
        case ErrorCode::validation_error: return "ValidationError";
    }
    return "Unknown";
}

}  // namespace ric
