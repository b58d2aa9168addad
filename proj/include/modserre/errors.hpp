#pragma once

#include <stdexcept>
#include <string>

namespace modserre {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed text input: expressions, table rows, partitions, rationals.
class ParseError : public Error {
public:
    ParseError(const std::string& message, int line, int column);

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
    const std::string& bare_message() const noexcept { return bare_; }

private:
    std::string bare_;
    int line_;
    int column_;
};

// A caller violated an operation's precondition (truncation mismatch,
// nonzero constant term, k = 0, slot outside truncation, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// An exponent fell outside the range on which duality is defined.
class DualityDomainError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

} // namespace modserre
