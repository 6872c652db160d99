#pragma once

#include <string>
#include <vector>

namespace fdo::cli {

struct Series {
  std::string label;
  std::string color;
  std::vector<std::pair<double, double>> points;
};

/// Minimal polyline plot.  Log scaling is applied per axis before layout.
/// Plots are a convenience; all acceptance data travels in the CSV files.
std::string render_svg(const std::string& title, const std::vector<Series>& series,
                       bool log_x, bool log_y);

}  // namespace fdo::cli
