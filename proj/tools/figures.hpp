#pragma once

#include <string>

namespace robinsq::cli {

struct FigureOutput {
  std::string stem;  // file name without extension, e.g. "figure2"
  std::string csv;
  std::string svg;
};

inline constexpr int kFigureCount = 6;

/// Curve data and plot for figure id 1..6. Throws std::out_of_range otherwise.
FigureOutput make_figure(int id);

}  // namespace robinsq::cli
