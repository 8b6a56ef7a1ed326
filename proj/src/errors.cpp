#include "qtype/errors.hpp"

namespace qtype {

std::string_view error_code_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::arity_mismatch: return "arity_mismatch";
    case ErrorCode::singular_matrix: return "singular_matrix";
    case ErrorCode::improper_ideal: return "improper_ideal";
    case ErrorCode::budget_exceeded: return "budget_exceeded";
    case ErrorCode::invalid_germ: return "invalid_germ";
    case ErrorCode::degenerate_sampling: return "degenerate_sampling";
    case ErrorCode::degenerate_slice: return "degenerate_slice";
    case ErrorCode::non_monomial: return "non_monomial";
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::indeterminate: return "indeterminate";
    }
    return "unknown";
}

ParseError::ParseError(int line, int column, const std::string& message)
    : Error(ErrorCode::parse_error,
            std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line), column_(column), message_(message)
{
}

}  // namespace qtype
