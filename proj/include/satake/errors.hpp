#pragma once

#include <stdexcept>
#include <string>

namespace satake {

// Invalid input: bad schema, out-of-range parameter, violated precondition.
// CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// A compute budget (quadrature evaluations, enumeration candidates) ran out.
// Carries the partial result so callers can keep it.  CLI maps this to exit code 3.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, double partial, long long used)
        : std::runtime_error(what), partial_value(partial), budget_used(used) {}
    double partial_value = 0.0;
    long long budget_used = 0;
};

// A cross-check inside the library failed; indicates a bug, not bad input.
// CLI maps this to exit code 4.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace satake
