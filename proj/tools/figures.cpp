#include "figures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "robinsq/contour.hpp"
#include "robinsq/export.hpp"
#include "robinsq/nodal_angles.hpp"
#include "robinsq/spectrum2d.hpp"
#include "robinsq/svg.hpp"

namespace robinsq::cli {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> grid(double lo, double hi, int n) {
  std::vector<double> xs(n + 1);
  for (int i = 0; i <= n; ++i) xs[i] = lo + (hi - lo) * i / n;
  return xs;
}

std::string pair_name(ModeLabel l) {
  return "(" + std::to_string(l.p) + "," + std::to_string(l.q) + ")";
}

double lambda_at(ModeLabel l, double h) {
  return eigenvalue(l, h == 0.0 ? RobinParam::neumann() : RobinParam::finite(h)).value;
}

FigureOutput eigenvalue_curves(int id, const std::vector<ModeLabel>& labels, double h_max) {
  const auto hs = grid(0.0, h_max, 480);
  std::vector<Series> series;
  double y_lo = INFINITY;
  double y_hi = -INFINITY;
  for (const auto l : labels) {
    Series s{pair_name(l), hs, {}};
    for (const double h : hs) s.y.push_back(lambda_at(l, h));
    y_lo = std::min(y_lo, *std::min_element(s.y.begin(), s.y.end()));
    y_hi = std::max(y_hi, *std::max_element(s.y.begin(), s.y.end()));
    series.push_back(std::move(s));
  }
  PlotOptions o;
  o.title = "Robin eigenvalues of the square, h <= " + std::to_string(static_cast<int>(h_max));
  o.x_label = "h";
  o.y_label = "lambda";
  o.x_max = h_max;
  o.y_min = std::floor(y_lo);
  o.y_max = std::ceil(y_hi);
  return {"figure" + std::to_string(id), series_csv(series, "h", "lambda"), line_plot_svg(series, o)};
}

FigureOutput nodal_panels(int id, RobinParam h, int p, int q, const std::vector<NamedAngle>& angles,
                          const std::string& title) {
  std::vector<NodalPanel> panels;
  std::ostringstream csv;
  csv << "panel,theta,curve,x,y\n";
  for (std::size_t k = 0; k < angles.size(); ++k) {
    const ThetaFamily f(h, angles[k].theta, p, q);
    auto lines = nodal_lines(f, 400);
    for (std::size_t c = 0; c < lines.size(); ++c) {
      for (const auto& pt : lines[c].points) {
        csv << k << ',' << format_double(angles[k].theta) << ',' << c << ','
            << format_double(pt[0]) << ',' << format_double(pt[1]) << '\n';
      }
    }
    panels.push_back({"theta = " + angles[k].name, std::move(lines)});
  }
  return {"figure" + std::to_string(id), csv.str(), nodal_svg(panels, title, 4)};
}

FigureOutput figure1() {
  const auto hs = grid(0.0, 100.0, 400);
  std::vector<Series> series;
  for (int p = 0; p <= 2; ++p) {
    Series s{"alpha_" + std::to_string(p), hs, {}};
    for (const double h : hs) {
      s.y.push_back(solve_alpha(p, h == 0.0 ? RobinParam::neumann() : RobinParam::finite(h)).alpha);
    }
    series.push_back(std::move(s));
  }
  PlotOptions o;
  o.title = "Robin branches alpha_p(h), p = 0, 1, 2";
  o.x_label = "h";
  o.y_label = "alpha";
  o.x_max = 100.0;
  o.y_max = 3 * kPi;
  return {"figure1", series_csv(series, "h", "alpha"), line_plot_svg(series, o)};
}

FigureOutput figure4() {
  const double t1 = std::atan(1.0 / 3.0);
  const std::vector<NamedAngle> angles{{"0", 0.0},
                                       {"arctan(1/3)", t1},
                                       {"pi/8", kPi / 8},
                                       {"pi/4", kPi / 4},
                                       {"3pi/8", 3 * kPi / 8},
                                       {"pi/2 - arctan(1/3)", kPi / 2 - t1},
                                       {"pi/2", kPi / 2},
                                       {"5pi/8", 5 * kPi / 8},
                                       {"3pi/4", 3 * kPi / 4},
                                       {"7pi/8", 7 * kPi / 8}};
  return nodal_panels(4, RobinParam::infinity(), 0, 2, angles,
                      "Nodal sets of the (0,2) family, Dirichlet limit");
}

FigureOutput figure6() {
  const auto hs = grid(20.0, 500.0, 480);
  Series s{"g", hs, {}};
  for (const double h : hs) s.y.push_back(g_function(h));
  PlotOptions o;
  o.title = "g(h) on [20, 500]";
  o.x_label = "h";
  o.y_label = "g";
  o.x_min = 0.0;
  o.x_max = 500.0;
  o.y_min = 1.0;
  o.y_max = std::ceil(*std::max_element(s.y.begin(), s.y.end()) * 100.0) / 100.0;
  const std::vector<Series> series{s};
  return {"figure6", series_csv(series, "h", "g"), line_plot_svg(series, o)};
}

}  // namespace

FigureOutput make_figure(int id) {
  switch (id) {
    case 1: return figure1();
    case 2:
      return eigenvalue_curves(2, {{0, 0}, {1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}, {3, 0}, {3, 1},
                                   {3, 2}, {4, 0}, {4, 1}},
                               12.0);
    case 3:
      return eigenvalue_curves(3, {{4, 0}, {4, 1}, {3, 3}, {4, 2}, {5, 0}, {5, 1}, {4, 3}, {5, 2},
                                   {4, 4}, {5, 3}, {6, 0}, {6, 1}, {6, 2}},
                               16.0);
    case 4: return figure4();
    case 5:
      return nodal_panels(5, RobinParam::finite(20.0), 5, 1, transition_angles_25(20.0),
                          "Nodal sets of the (5,1) family at h = 20");
    case 6: return figure6();
    default: throw std::out_of_range("figure id must be in 1..6");
  }
}

}  // namespace robinsq::cli
