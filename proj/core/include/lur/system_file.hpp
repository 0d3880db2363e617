#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lur/multipoly.hpp"

namespace lur {

// Parsed input system. Variable order is the declaration order, which is
// also the elimination order of the solver.
struct SystemFile {
  std::vector<std::string> variables;
  std::vector<MultiPoly> polynomials;
};

// Text format: a header line "vars: x, y, z", then one polynomial per line.
// Blank lines and lines starting with '#' are skipped. Throws ParseError
// with 1-based line/column on malformed input, unknown variables, duplicate
// variable names, or an empty system.
SystemFile parse_system(std::string_view text);

}  // namespace lur
