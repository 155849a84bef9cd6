#pragma once

#include <stdexcept>
#include <string>

namespace toolctx {

// Base class for all toolctx failures.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad input data or violated invariants (CLI exit code 2).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Malformed text that could not be parsed at all.
class ParseError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Network / endpoint failures of the http client (CLI exit code 3).
class TransportError : public Error {
public:
    TransportError(const std::string& kind, const std::string& message, int retries = 0)
        : Error(message), kind_(kind), retries_(retries) {}

    const std::string& kind() const { return kind_; }
    int retries() const { return retries_; }

private:
    std::string kind_;
    int retries_ = 0;
};

}  // namespace toolctx
