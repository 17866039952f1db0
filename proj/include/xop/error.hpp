#pragma once

#include <stdexcept>
#include <string>

namespace xop {

// Bad family parameter (a = 0, a = 1, c a nonpositive integer, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Argument outside the domain of an operation (n not in sigma, x < u, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An internal identity failed (non-exact division, ...). Signals a bug.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// No solution within the requested degree bounds.
class DegreeBoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class AmbiguityError : public std::runtime_error {
public:
    AmbiguityError(const std::string& what, int null_dim)
        : std::runtime_error(what), null_dim_(null_dim) {}
    int null_dim() const noexcept { return null_dim_; }

private:
    int null_dim_;
};

class NoRecurrenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotFoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnsupportedFamilyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace xop
