#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace fow {

namespace {

constexpr double kWidth = 720.0, kHeight = 440.0;
constexpr double kLeft = 60.0, kRight = 20.0, kTop = 40.0, kBottom = 40.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string render_svg(const std::vector<Series>& series, const std::string& title) {
  double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
  bool have = false;
  for (const auto& s : series) {
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (std::isnan(s.x[i]) || std::isnan(s.y[i])) continue;
      if (!have) {
        xmin = xmax = s.x[i];
        ymin = ymax = s.y[i];
        have = true;
      } else {
        xmin = std::min(xmin, s.x[i]);
        xmax = std::max(xmax, s.x[i]);
        ymin = std::min(ymin, s.y[i]);
        ymax = std::max(ymax, s.y[i]);
      }
    }
  }
  if (xmax - xmin < 1e-300) xmax = xmin + 1.0;
  if (ymax - ymin < 1e-300) ymax = ymin + 1.0;
  const double px = kWidth - kLeft - kRight, py = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * px; };
  auto sy = [&](double y) { return kHeight - kBottom - (y - ymin) / (ymax - ymin) * py; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\" "
      << "font-family=\"sans-serif\">" << title << "</text>\n";
  // axes
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kHeight - kBottom << "\" x2=\""
      << kWidth - kRight << "\" y2=\"" << kHeight - kBottom
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
      << kHeight - kBottom << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double xv = xmin + k * (xmax - xmin) / 4.0;
    const double yv = ymin + k * (ymax - ymin) / 4.0;
    out << "<text x=\"" << sx(xv) << "\" y=\"" << kHeight - kBottom + 16
        << "\" text-anchor=\"middle\" font-size=\"11\" font-family=\"sans-serif\">" << num(xv)
        << "</text>\n";
    out << "<text x=\"" << kLeft - 6 << "\" y=\"" << sy(yv) + 4
        << "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\">" << num(yv)
        << "</text>\n";
  }
  int color = 0;
  double legend_y = kTop + 6.0;
  for (const auto& s : series) {
    const char* stroke = kPalette[color % 8];
    ++color;
    out << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.5\" points=\"";
    bool gap = true;
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (std::isnan(s.x[i]) || std::isnan(s.y[i])) {
        gap = true;
        continue;
      }
      if (!gap) out << ' ';
      out << num(sx(s.x[i])) << ',' << num(sy(s.y[i]));
      gap = false;
    }
    out << "\"/>\n";
    out << "<text x=\"" << kWidth - kRight - 6 << "\" y=\"" << legend_y
        << "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\" fill=\"" << stroke
        << "\">" << s.name << "</text>\n";
    legend_y += 14.0;
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace fow
