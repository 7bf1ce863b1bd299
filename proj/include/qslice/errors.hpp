#pragma once

#include <stdexcept>
#include <string>

namespace qslice {

/// Mathematical domain violation (zero inverse, vanishing symmetrization, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Invalid sampling or truncation parameter.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input outside an operation's precondition (e.g. negative support where H^2 is required).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Iterative method failed to converge.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed serialized input. `record` is the index of the offending record, or -1.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, long record = -1)
        : std::runtime_error(what), record_(record) {}
    long record() const { return record_; }

private:
    long record_;
};

}  // namespace qslice
