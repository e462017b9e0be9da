#ifndef WILDRAM_ERRORS_HPP
#define WILDRAM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wildram {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Mismatched rings, arities or moduli between operands.
struct structural_error : error {
    using error::error;
};

// Argument outside the operation's stated domain.
struct domain_error : error {
    using error::error;
};

// A stated precondition does not hold.
struct precondition_error : error {
    using error::error;
};

// Division by zero in F_p or exact polynomial division failure.
struct division_error : error {
    using error::error;
};

// Implicit solver cannot make progress (non-contractive or singular relation).
struct solver_error : error {
    using error::error;
};

}  // namespace wildram

#endif
