#pragma once

#include <array>
#include <functional>
#include <vector>

#include "robinsq/nodal.hpp"

namespace robinsq {

struct Polyline {
  std::vector<std::array<double, 2>> points;
  bool closed = false;
};

/// Zero level set of f on [x0, x1] x [y0, y1] by marching squares on an
/// n x n grid of cell-centred samples, joined into polylines.
std::vector<Polyline> zero_contours(const std::function<double(double, double)>& f, double x0,
                                    double x1, double y0, double y1, int n);

/// Interior nodal lines of a family on the square.
std::vector<Polyline> nodal_lines(const ThetaFamily& family, int n = 512);

}  // namespace robinsq
