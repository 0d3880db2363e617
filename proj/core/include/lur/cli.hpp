#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lur {

// Command-line driver behind the lursolve binary, separated for testing.
// Reads the system from the positional file argument, or stdin when the
// argument is "-" or absent. Exit codes: 0 solved, 2 positive-dimensional
// ideal, 3 malformed input, 4 rejected scale override, 1 anything else.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace lur
