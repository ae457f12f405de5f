#include "torustat/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "torustat/angle.hpp"

namespace torustat {

namespace {
std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}
}  // namespace

std::string rose_svg(std::span<const std::size_t> counts, double size_px) {
  const double cx = size_px / 2.0;
  const double cy = size_px / 2.0;
  const double r_max = 0.45 * size_px;
  const std::size_t bins = counts.size();
  const std::size_t max_count = bins == 0 ? 0 : *std::max_element(counts.begin(), counts.end());

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(size_px) << "\" height=\""
      << fmt(size_px) << "\" viewBox=\"0 0 " << fmt(size_px) << " " << fmt(size_px) << "\">\n";
  out << "<circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" r=\"" << fmt(r_max)
      << "\" fill=\"none\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  for (std::size_t k = 0; k < bins; ++k) {
    if (counts[k] == 0 || max_count == 0) continue;
    const double r = r_max * std::sqrt(static_cast<double>(counts[k]) /
                                       static_cast<double>(max_count));
    const double a0 = kTwoPi * static_cast<double>(k) / static_cast<double>(bins);
    const double a1 = kTwoPi * static_cast<double>(k + 1) / static_cast<double>(bins);
    const double x0 = cx + r * std::cos(a0), y0 = cy - r * std::sin(a0);
    const double x1 = cx + r * std::cos(a1), y1 = cy - r * std::sin(a1);
    out << "<path d=\"M " << fmt(cx) << " " << fmt(cy) << " L " << fmt(x0) << " " << fmt(y0)
        << " A " << fmt(r) << " " << fmt(r) << " 0 0 0 " << fmt(x1) << " " << fmt(y1)
        << " Z\" fill=\"#4878a8\" fill-opacity=\"0.8\" stroke=\"#1d3d5c\" stroke-width=\"0.5\"/>\n";
  }
  out << "<line x1=\"" << fmt(cx - r_max) << "\" y1=\"" << fmt(cy) << "\" x2=\""
      << fmt(cx + r_max) << "\" y2=\"" << fmt(cy)
      << "\" stroke=\"#999\" stroke-width=\"0.5\"/>\n";
  out << "<line x1=\"" << fmt(cx) << "\" y1=\"" << fmt(cy - r_max) << "\" x2=\"" << fmt(cx)
      << "\" y2=\"" << fmt(cy + r_max) << "\" stroke=\"#999\" stroke-width=\"0.5\"/>\n";
  out << "</svg>\n";
  return out.str();
}

std::string qq_svg(std::span<const std::pair<double, double>> pairs, double axis_max,
                   double size_px) {
  const double margin = 40.0;
  const double plot = size_px - 2.0 * margin;
  const auto sx = [&](double v) { return margin + plot * v / axis_max; };
  const auto sy = [&](double v) { return size_px - margin - plot * v / axis_max; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(size_px) << "\" height=\""
      << fmt(size_px) << "\" viewBox=\"0 0 " << fmt(size_px) << " " << fmt(size_px) << "\">\n";
  out << "<rect x=\"" << fmt(margin) << "\" y=\"" << fmt(margin) << "\" width=\"" << fmt(plot)
      << "\" height=\"" << fmt(plot) << "\" fill=\"none\" stroke=\"#333\" stroke-width=\"1\"/>\n";
  out << "<line x1=\"" << fmt(sx(0.0)) << "\" y1=\"" << fmt(sy(0.0)) << "\" x2=\""
      << fmt(sx(axis_max)) << "\" y2=\"" << fmt(sy(axis_max))
      << "\" stroke=\"#c04040\" stroke-width=\"1\"/>\n";
  for (const auto& [x, y] : pairs) {
    out << "<circle cx=\"" << fmt(sx(x)) << "\" cy=\"" << fmt(sy(y))
        << "\" r=\"3\" fill=\"#30609c\" fill-opacity=\"0.8\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace torustat
