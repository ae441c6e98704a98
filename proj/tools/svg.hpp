#pragma once

#include <string>
#include <vector>

#include "report.hpp"

namespace fow {

/// Fixed-size line chart (one polyline per series); NaN samples break lines.
/// Empty input yields a well-formed empty-axes document.
std::string render_svg(const std::vector<Series>& series, const std::string& title);

}  // namespace fow
