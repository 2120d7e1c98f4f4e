#include "robinsq/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace robinsq {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
                                    "#000080", "#800000", "#008080"};
constexpr int kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (const char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

double nice_step(double span) {
  const double raw = span / 6.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (const double m : {1.0, 2.0, 5.0, 10.0}) {
    if (raw <= m * mag) return m * mag;
  }
  return 10.0 * mag;
}

}  // namespace

std::string line_plot_svg(const std::vector<Series>& series, const PlotOptions& o) {
  const double left = 70, right = 170, top = 40, bottom = 60;
  const double pw = o.width - left - right;
  const double ph = o.height - top - bottom;
  const auto sx = [&](double x) { return left + (x - o.x_min) / (o.x_max - o.x_min) * pw; };
  const auto sy = [&](double y) { return top + (o.y_max - y) / (o.y_max - o.y_min) * ph; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << o.width << "\" height=\""
      << o.height << "\" viewBox=\"0 0 " << o.width << ' ' << o.height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << num(left + pw / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
      << escape(o.title) << "</text>\n";
  out << "<rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\"" << num(pw)
      << "\" height=\"" << num(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";

  const double xs = nice_step(o.x_max - o.x_min);
  for (double t = std::ceil(o.x_min / xs) * xs; t <= o.x_max + 1e-9 * xs; t += xs) {
    out << "<line x1=\"" << num(sx(t)) << "\" y1=\"" << num(top + ph) << "\" x2=\"" << num(sx(t))
        << "\" y2=\"" << num(top + ph + 5) << "\" stroke=\"black\"/>";
    out << "<text x=\"" << num(sx(t)) << "\" y=\"" << num(top + ph + 20)
        << "\" text-anchor=\"middle\" font-size=\"11\">" << tick_label(t) << "</text>\n";
  }
  const double ys = nice_step(o.y_max - o.y_min);
  for (double t = std::ceil(o.y_min / ys) * ys; t <= o.y_max + 1e-9 * ys; t += ys) {
    out << "<line x1=\"" << num(left - 5) << "\" y1=\"" << num(sy(t)) << "\" x2=\"" << num(left)
        << "\" y2=\"" << num(sy(t)) << "\" stroke=\"black\"/>";
    out << "<text x=\"" << num(left - 8) << "\" y=\"" << num(sy(t) + 4)
        << "\" text-anchor=\"end\" font-size=\"11\">" << tick_label(t) << "</text>\n";
  }
  out << "<text x=\"" << num(left + pw / 2) << "\" y=\"" << num(o.height - 15)
      << "\" text-anchor=\"middle\" font-size=\"13\">" << escape(o.x_label) << "</text>\n";
  out << "<text x=\"18\" y=\"" << num(top + ph / 2) << "\" text-anchor=\"middle\" font-size=\"13\" "
      << "transform=\"rotate(-90 18 " << num(top + ph / 2) << ")\">" << escape(o.y_label)
      << "</text>\n";

  out << "<clipPath id=\"plot\"><rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\""
      << num(pw) << "\" height=\"" << num(ph) << "\"/></clipPath>\n";
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    const char* colour = kPalette[k % kPaletteSize];
    out << "<polyline clip-path=\"url(#plot)\" fill=\"none\" stroke=\"" << colour
        << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      out << num(sx(s.x[i])) << ',' << num(sy(s.y[i])) << (i + 1 < s.x.size() ? " " : "");
    }
    out << "\"/>\n";
    const double ly = top + 14 + 16 * static_cast<double>(k);
    out << "<line x1=\"" << num(left + pw + 12) << "\" y1=\"" << num(ly) << "\" x2=\""
        << num(left + pw + 32) << "\" y2=\"" << num(ly) << "\" stroke=\"" << colour
        << "\" stroke-width=\"2\"/>";
    out << "<text x=\"" << num(left + pw + 38) << "\" y=\"" << num(ly + 4)
        << "\" font-size=\"11\">" << escape(s.name) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string nodal_svg(const std::vector<NodalPanel>& panels, const std::string& title,
                      int columns) {
  columns = std::max(1, columns);
  const int rows = (static_cast<int>(panels.size()) + columns - 1) / columns;
  const double cell = 200, pad = 20, caption = 22, head = 40;
  const double width = columns * (cell + pad) + pad;
  const double height = head + rows * (cell + pad + caption) + pad;
  const double half = 0.5 * std::numbers::pi;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
      << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << num(width / 2) << "\" y=\"26\" text-anchor=\"middle\" font-size=\"15\">"
      << escape(title) << "</text>\n";
  for (std::size_t k = 0; k < panels.size(); ++k) {
    const int r = static_cast<int>(k) / columns;
    const int c = static_cast<int>(k) % columns;
    const double ox = pad + c * (cell + pad);
    const double oy = head + r * (cell + pad + caption);
    const auto px = [&](double x) { return ox + (x + half) / (2 * half) * cell; };
    const auto py = [&](double y) { return oy + (half - y) / (2 * half) * cell; };
    const char* colour = kPalette[k % kPaletteSize];
    out << "<rect x=\"" << num(ox) << "\" y=\"" << num(oy) << "\" width=\"" << num(cell)
        << "\" height=\"" << num(cell) << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (const auto& line : panels[k].lines) {
      out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.2\" points=\"";
      for (std::size_t i = 0; i < line.points.size(); ++i) {
        out << num(px(line.points[i][0])) << ',' << num(py(line.points[i][1]))
            << (i + 1 < line.points.size() ? " " : "");
      }
      out << "\"/>\n";
    }
    out << "<text x=\"" << num(ox + cell / 2) << "\" y=\"" << num(oy + cell + 16)
        << "\" text-anchor=\"middle\" font-size=\"12\">" << escape(panels[k].label) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace robinsq
