#include "lur/report.hpp"

#include <sstream>

#include "json.hpp"

namespace lur {

namespace {

using njson = nlohmann::ordered_json;

njson box_json(const ComplexInterval& b) {
  return njson::array(
      {b.re.lo.str(), b.re.hi.str(), b.im.lo.str(), b.im.hi.str()});
}

njson rat_list(const std::vector<Rational>& v) {
  njson a = njson::array();
  for (const Rational& r : v) a.push_back(r.str());
  return a;
}

std::string render_json(const LurResult& res,
                        const std::vector<std::string>& variables) {
  njson j;
  j["variables"] = variables;
  j["eps"] = res.eps.str();
  j["quotient_dimension"] = res.quotient_dim;
  j["solutions"] = res.roots.size();

  njson lurj;
  njson elims = njson::array();
  for (const UniPoly& t : res.eliminants) elims.push_back(t.str("t"));
  lurj["eliminants"] = elims;
  lurj["scales"] = rat_list(res.scales);
  lurj["prefix_products"] = rat_list(res.prefixes);
  lurj["d"] = rat_list(res.d);
  lurj["radii"] = rat_list(res.radii);
  lurj["match_thresholds"] = rat_list(res.thresholds);
  njson seps = njson::array();
  for (const auto& s : res.separations) {
    if (s)
      seps.push_back(s->str());
    else
      seps.push_back(nullptr);
  }
  lurj["separations"] = seps;
  lurj["eps_schedule"] = rat_list(res.eps_schedule);
  j["lur"] = lurj;

  njson roots = njson::array();
  for (const RootBox& rb : res.roots) {
    njson r;
    njson cs = njson::array();
    for (const ComplexInterval& c : rb.coords) cs.push_back(box_json(c));
    r["coords"] = cs;
    if (rb.multiplicity) r["multiplicity"] = *rb.multiplicity;
    roots.push_back(r);
  }
  j["roots"] = roots;

  njson levels = njson::array();
  for (const LevelStats& st : res.stats) {
    njson l;
    l["degree"] = st.degree;
    l["boxes"] = st.boxes;
    l["coeff_bits"] = st.coeff_bits;
    levels.push_back(l);
  }
  j["stats"]["levels"] = levels;

  return j.dump(2) + "\n";
}

std::string render_text(const LurResult& res,
                        const std::vector<std::string>& variables) {
  std::ostringstream os;
  os << "variables:";
  for (const std::string& v : variables) os << ' ' << v;
  os << '\n';
  os << "quotient dimension: " << res.quotient_dim << '\n';
  os << "eps: " << res.eps << '\n';
  for (std::size_t i = 0; i < res.eliminants.size(); ++i)
    os << "T_" << i + 1 << "(t) = " << res.eliminants[i].str("t") << '\n';
  if (!res.scales.empty()) {
    os << "scales:";
    for (const Rational& s : res.scales) os << ' ' << s;
    os << '\n';
  }
  if (!res.d.empty()) {
    os << "d:";
    for (const Rational& v : res.d) os << ' ' << v;
    os << '\n';
  }
  os << res.roots.size() << " solution(s)\n";
  for (std::size_t k = 0; k < res.roots.size(); ++k) {
    os << "solution " << k + 1;
    if (res.roots[k].multiplicity)
      os << " (multiplicity " << *res.roots[k].multiplicity << ")";
    os << '\n';
    for (std::size_t i = 0; i < res.roots[k].coords.size(); ++i) {
      os << "  " << variables[i] << " in " << res.roots[k].coords[i] << '\n';
    }
  }
  return os.str();
}

}  // namespace

std::string render_report(const LurResult& res,
                          const std::vector<std::string>& variables,
                          ReportFormat format) {
  if (variables.size() != res.nvars)
    throw std::invalid_argument("render_report: variable name count mismatch");
  return format == ReportFormat::kJson ? render_json(res, variables)
                                       : render_text(res, variables);
}

}  // namespace lur
