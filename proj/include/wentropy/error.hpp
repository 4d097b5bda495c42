#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wentropy {

// Every domain failure carries one of these codes; the CLI prints the
// code verbatim so scripts can branch on it.
enum class ErrorCode {
    InvalidOrder,
    InvalidParameter,
    OutOfDomain,
    Divergence,
    DegenerateSample,
    ParseError,
    IoError,
    InvalidInputFile,
    MissingTableEntry,
    Inapplicable,
    QuadratureFailure,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidOrder: return "invalid_order";
        case ErrorCode::InvalidParameter: return "invalid_parameter";
        case ErrorCode::OutOfDomain: return "out_of_domain";
        case ErrorCode::Divergence: return "divergence";
        case ErrorCode::DegenerateSample: return "degenerate_sample";
        case ErrorCode::ParseError: return "parse_error";
        case ErrorCode::IoError: return "io_error";
        case ErrorCode::InvalidInputFile: return "invalid_input_file";
        case ErrorCode::MissingTableEntry: return "missing_table_entry";
        case ErrorCode::Inapplicable: return "inapplicable";
        case ErrorCode::QuadratureFailure: return "quadrature_failure";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace wentropy
