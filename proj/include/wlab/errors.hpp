#pragma once

#include <stdexcept>
#include <string>

namespace wlab {

// Invalid arguments or out-of-contract usage. CLI maps this to exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configured resource cap (term count, exponent guard) was exceeded.
// CLI maps this to exit code 3.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A recursion step factor has a vanishing denominator; this marks the
// constant base case of the pole-order sweep.
class BaseCaseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Cooperative deadline hit inside a long-running oracle evaluation.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace wlab
