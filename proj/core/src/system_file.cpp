#include "lur/system_file.hpp"

#include <cctype>

#include "lur/errors.hpp"
#include "lur/parser.hpp"

namespace lur {

namespace {

bool is_ident(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
    return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

SystemFile parse_system(std::string_view text) {
  SystemFile sys;
  bool have_header = false;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view raw = text.substr(
        start, end == std::string_view::npos ? text.size() - start
                                             : end - start);
    ++line_no;
    std::string_view line = strip(raw);
    if (!line.empty() && line[0] != '#') {
      if (!have_header) {
        constexpr std::string_view kPrefix = "vars:";
        if (!line.starts_with(kPrefix))
          throw ParseError(line_no, 1, "expected 'vars:' header line");
        std::string_view rest = line.substr(kPrefix.size());
        std::size_t p = 0;
        while (true) {
          std::size_t comma = rest.find(',', p);
          std::string_view name = strip(rest.substr(
              p, comma == std::string_view::npos ? rest.size() - p
                                                 : comma - p));
          int col = static_cast<int>(kPrefix.size() + p) + 1;
          if (!is_ident(name))
            throw ParseError(line_no, col, "bad variable name");
          for (const auto& v : sys.variables)
            if (v == name)
              throw ParseError(line_no, col,
                               "duplicate variable '" + std::string(name) + "'");
          sys.variables.emplace_back(name);
          if (comma == std::string_view::npos) break;
          p = comma + 1;
        }
        have_header = true;
      } else {
        sys.polynomials.push_back(
            parse_poly(raw, sys.variables, line_no));
      }
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  if (!have_header)
    throw ParseError(line_no, 1, "missing 'vars:' header line");
  if (sys.polynomials.empty())
    throw ParseError(line_no, 1, "system has no polynomials");
  return sys;
}

}  // namespace lur
