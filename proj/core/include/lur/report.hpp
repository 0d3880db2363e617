#pragma once

#include <string>
#include <vector>

#include "lur/lur.hpp"

namespace lur {

enum class ReportFormat { kJson, kText };

// Deterministic rendering of a solve result. Rationals print exactly, boxes
// as [re.lo, re.hi, im.lo, im.hi] endpoint strings, keys in a fixed order,
// so identical results give byte-identical output.
std::string render_report(const LurResult& res,
                          const std::vector<std::string>& variables,
                          ReportFormat format);

}  // namespace lur
