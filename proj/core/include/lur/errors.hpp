#pragma once

#include <stdexcept>
#include <string>

namespace lur {

// Ideal has dimension > 0: some variable has no pure-power leading monomial
// in the reduced basis, so the residue ring is infinite-dimensional.
struct NotZeroDimensionalError : std::runtime_error {
  explicit NotZeroDimensionalError(const std::string& what)
      : std::runtime_error(what) {}
};

// The reduced basis is {1}: the system has no solutions.
struct TrivialIdealError : std::runtime_error {
  TrivialIdealError() : std::runtime_error("ideal is the whole ring") {}
};

// A user-supplied scale or d_1 override fails its admissibility bound.
struct InvalidScaleError : std::runtime_error {
  explicit InvalidScaleError(const std::string& what)
      : std::runtime_error(what) {}
};

// A child isolation box matched zero or several parent boxes. Indicates a
// violated width/threshold precondition; not reachable from a sound ladder.
struct MatchViolationError : std::runtime_error {
  explicit MatchViolationError(const std::string& what)
      : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(int line_, int col_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ", column " +
                           std::to_string(col_) + ": " + what),
        line(line_), column(col_) {}
};

}  // namespace lur
