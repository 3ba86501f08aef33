#pragma once

#include <string>
#include <vector>

namespace ns1d {

// Dependency-free polyline plot of (xs, ys) with min/max axis labels.
void write_polyline_svg(const std::string& path, const std::string& title,
                        const std::vector<double>& xs, const std::vector<double>& ys);

} // namespace ns1d
