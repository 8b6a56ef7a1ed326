#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qtype {

enum class ErrorCode {
    arity_mismatch,
    singular_matrix,
    improper_ideal,
    budget_exceeded,
    invalid_germ,
    degenerate_sampling,
    degenerate_slice,
    non_monomial,
    invalid_argument,
    parse_error,
    indeterminate,
};

std::string_view error_code_name(ErrorCode code) noexcept;

// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& message);

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }

private:
    int line_;
    int column_;
    std::string message_;
};

}  // namespace qtype
