#pragma once

#include <string>
#include <utility>
#include <vector>

namespace jones::lab {

/// Static scatter plot; y on a log scale when log_y is set (nonpositive y dropped).
std::string svg_scatter(const std::vector<std::pair<double, double>>& pts, const std::string& title,
                        const std::string& xlabel, const std::string& ylabel, bool log_y);

/// Static polyline plot.
std::string svg_line(const std::vector<std::pair<double, double>>& pts, const std::string& title,
                     const std::string& xlabel, const std::string& ylabel);

}  // namespace jones::lab
