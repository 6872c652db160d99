#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace fdo::cli {

namespace {

constexpr int kWidth = 720;
constexpr int kHeight = 480;
constexpr int kPad = 56;

double axis_value(double v, bool log_scale) {
  return log_scale ? std::log10(std::max(v, 1e-300)) : v;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

std::string render_svg(const std::string& title, const std::vector<Series>& series,
                       bool log_x, bool log_y) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      xmin = std::min(xmin, axis_value(x, log_x));
      xmax = std::max(xmax, axis_value(x, log_x));
      ymin = std::min(ymin, axis_value(y, log_y));
      ymax = std::max(ymax, axis_value(y, log_y));
    }
  }
  if (!(xmax > xmin)) xmax = xmin + 1.0;
  if (!(ymax > ymin)) ymax = ymin + 1.0;

  const auto px = [&](double x) {
    return kPad + (kWidth - 2 * kPad) * (axis_value(x, log_x) - xmin) / (xmax - xmin);
  };
  const auto py = [&](double y) {
    return kHeight - kPad -
           (kHeight - 2 * kPad) * (axis_value(y, log_y) - ymin) / (ymax - ymin);
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"15\">" << title << "</text>\n";
  out << "<line x1=\"" << kPad << "\" y1=\"" << kHeight - kPad << "\" x2=\""
      << kWidth - kPad << "\" y2=\"" << kHeight - kPad
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << kPad << "\" y1=\"" << kPad << "\" x2=\"" << kPad
      << "\" y2=\"" << kHeight - kPad << "\" stroke=\"black\"/>\n";

  int row = 0;
  for (const auto& s : series) {
    out << "<polyline fill=\"none\" stroke=\"" << s.color
        << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : s.points) out << fmt(px(x)) << "," << fmt(py(y)) << " ";
    out << "\"/>\n";
    out << "<text x=\"" << kWidth - kPad + 4 << "\" y=\"" << kPad + 16 * row
        << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" << s.color
        << "\">" << s.label << "</text>\n";
    ++row;
  }
  const char* xnote = log_x ? " (log10)" : "";
  const char* ynote = log_y ? " (log10)" : "";
  out << "<text x=\"" << kPad << "\" y=\"" << kHeight - kPad + 28
      << "\" font-family=\"sans-serif\" font-size=\"11\">x" << xnote << ": ["
      << fmt(xmin) << ", " << fmt(xmax) << "]  y" << ynote << ": [" << fmt(ymin)
      << ", " << fmt(ymax) << "]</text>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace fdo::cli
