#pragma once

#include "orbicheck/cyclotomic.hpp"

#include <string>

namespace orbicheck {

/**
 * Parse an exact scalar: integers, fractions, zeta(N) powers, sums, products,
 * negation, parentheses. Examples: "3", "-7/2", "zeta(8)^-1",
 * "(zeta(8)+zeta(8)^-1)/2". Throws ParseError with a position on bad input.
 */
CycNum parse_scalar(const std::string& text);

} // namespace orbicheck
