#pragma once

#include <stdexcept>
#include <string>

namespace wreathlab {

// Thrown when an argument violates an operation's precondition.
class invalid_input : public std::invalid_argument {
public:
    explicit invalid_input(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown when a configured work budget (iterations, digits, order) is exhausted.
class budget_exceeded : public std::runtime_error {
public:
    explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a certified result would require more precision than supplied.
class needs_more_digits : public std::runtime_error {
public:
    explicit needs_more_digits(const std::string& what) : std::runtime_error(what) {}
};

// Internal invariant breach; indicates a bug, not a caller error.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace wreathlab
