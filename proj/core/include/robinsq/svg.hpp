#pragma once

#include <string>
#include <vector>

#include "robinsq/contour.hpp"
#include "robinsq/export.hpp"

namespace robinsq {

struct PlotOptions {
  std::string title;
  std::string x_label;
  std::string y_label;
  double x_min = 0.0;
  double x_max = 1.0;
  double y_min = 0.0;
  double y_max = 1.0;
  int width = 760;
  int height = 520;
};

/// Curves on linear axes with ticks and a legend.
std::string line_plot_svg(const std::vector<Series>& series, const PlotOptions& options);

struct NodalPanel {
  std::string label;
  std::vector<Polyline> lines;
};

/// One square frame per panel, drawn in a grid with `columns` panels per row.
std::string nodal_svg(const std::vector<NodalPanel>& panels, const std::string& title,
                      int columns = 4);

}  // namespace robinsq
