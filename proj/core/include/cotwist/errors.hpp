#pragma once

#include <stdexcept>
#include <string>

namespace cotwist {

/// Inversion of a non-unit (zero in a field, or a zero divisor in k[C_m]).
class NonUnitError : public std::domain_error {
public:
    explicit NonUnitError(const std::string& what) : std::domain_error(what) {}
};

/// Specialisation at q with q^m != 1.
class InvalidRootError : public std::domain_error {
public:
    explicit InvalidRootError(const std::string& what) : std::domain_error(what) {}
};

/// A computation exceeded its configured size/degree budget.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// Structural precondition violated (size mismatch, invalid table, ...).
class InvalidInputError : public std::invalid_argument {
public:
    explicit InvalidInputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Internal consistency check failed; indicates a bug, not a math condition.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace cotwist
