#include "lur/cli.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "lur/errors.hpp"
#include "lur/lur.hpp"
#include "lur/report.hpp"
#include "lur/system_file.hpp"

namespace lur {

namespace {

// exact rational flag value; nullopt on malformed or nonpositive text
std::optional<Rational> positive_rational(const std::string& text) {
  auto r = Rational::parse(text);
  if (!r || r->sign() <= 0) return std::nullopt;
  return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"certified solver for zero-dimensional polynomial systems"};
  std::string input_path = "-";
  std::string eps_text = "1/1024";
  std::string scale_text;
  std::string d1_text;
  std::string format = "json";
  bool real_only = false;
  bool multiplicities = false;
  bool tight = false;

  app.add_option("input", input_path, "system file, or - for stdin");
  app.add_option("--eps", eps_text, "coordinate box width bound, exact rational")
      ->capture_default_str();
  app.add_option("--s", scale_text,
                 "scale overrides s_1..s_{n-1}, comma separated rationals");
  app.add_option("--d1", d1_text, "override for the first matching distance");
  app.add_flag("--real-only", real_only,
               "keep only solutions whose coordinates are all real");
  app.add_flag("--multiplicities", multiplicities,
               "attach intersection multiplicities to solutions");
  app.add_flag("--tight-bounds", tight,
               "derive scales from isolated value bounds instead of "
               "coefficient bounds");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  std::vector<const char*> argv;
  argv.push_back("lursolve");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse((int)argv.size(), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  std::string text;
  if (input_path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(input_path);
    if (!f) {
      err << "cannot open " << input_path << '\n';
      return 1;
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }

  SolveOptions opt;
  auto eps = positive_rational(eps_text);
  if (!eps) {
    err << "--eps: expected a positive rational, got '" << eps_text << "'\n";
    return 1;
  }
  opt.eps = *eps;
  if (!scale_text.empty()) {
    std::vector<Rational> scales;
    std::size_t pos = 0;
    while (pos <= scale_text.size()) {
      std::size_t comma = scale_text.find(',', pos);
      if (comma == std::string::npos) comma = scale_text.size();
      std::string item = scale_text.substr(pos, comma - pos);
      auto r = Rational::parse(item);
      if (!r) {
        err << "--s: expected a rational, got '" << item << "'\n";
        return 1;
      }
      scales.push_back(*r);
      pos = comma + 1;
    }
    opt.scales = std::move(scales);
  }
  if (!d1_text.empty()) {
    auto r = Rational::parse(d1_text);
    if (!r) {
      err << "--d1: expected a rational, got '" << d1_text << "'\n";
      return 1;
    }
    opt.d1 = *r;
  }
  opt.real_only = real_only;
  opt.with_multiplicities = multiplicities;
  opt.tight_bounds = tight;

  try {
    SystemFile sys = parse_system(text);
    LurResult res = lur_solve(sys.polynomials, sys.variables.size(), opt);
    out << render_report(res, sys.variables,
                         format == "json" ? ReportFormat::kJson
                                          : ReportFormat::kText);
    return 0;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 3;
  } catch (const NotZeroDimensionalError& e) {
    err << "not zero-dimensional: " << e.what() << '\n';
    return 2;
  } catch (const InvalidScaleError& e) {
    err << "invalid scale: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace lur
