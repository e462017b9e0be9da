#ifndef WILDRAM_PARSE_HPP
#define WILDRAM_PARSE_HPP

#include <string>

#include "wildram/poly.hpp"

namespace wildram {

// Raised for text that does not match the polynomial grammar.
struct parse_error : error {
    using error::error;
};

// Grammar: integer literals, the ring's variable names, +, -, *, ^ with
// non-negative integer exponents, and parentheses; whitespace-insensitive.
// Coefficients are reduced mod p at parse time.
Poly parse_poly(const std::string& text, const RingPtr& ring);

}  // namespace wildram

#endif
