#pragma once

#include <stdexcept>
#include <string>

namespace hgc {

// Violated precondition or malformed input.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// An enumeration budget or size cap was exceeded. Never a silent
// approximation: callers must either raise the budget or shrink the input.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hgc
