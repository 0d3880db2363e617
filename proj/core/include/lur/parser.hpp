#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lur/errors.hpp"
#include "lur/multipoly.hpp"

namespace lur {

// Parses one polynomial in expanded form: integer/rational literals,
// declared variable names, + - * / ^ and parentheses. '/' needs a nonzero
// constant divisor, '^' a non-negative integer exponent. Column numbers in
// errors are 1-based; `line` is only echoed into the error.
MultiPoly parse_poly(std::string_view text,
                     const std::vector<std::string>& var_names, int line = 1);

}  // namespace lur
