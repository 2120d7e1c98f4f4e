#include "robinsq/contour.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace robinsq {

namespace {

// Edge ids: horizontal edge (i, j) joins nodes (i, j)-(i+1, j); vertical
// edge joins (i, j)-(i, j+1).
std::int64_t edge_id(int i, int j, bool vertical_edge, int n) {
  return (static_cast<std::int64_t>(j) * (n + 1) + i) * 2 + (vertical_edge ? 1 : 0);
}

}  // namespace

std::vector<Polyline> zero_contours(const std::function<double(double, double)>& f, double x0,
                                    double x1, double y0, double y1, int n) {
  if (n < 2) throw std::invalid_argument("zero_contours: need n >= 2");
  const double dx = (x1 - x0) / n;
  const double dy = (y1 - y0) / n;
  // nodes sit at cell centres of an n x n partition, so the outer boundary is never sampled
  const int m = n;  // nodes per axis
  std::vector<double> v(static_cast<std::size_t>(m) * m);
  std::vector<double> xs(m);
  std::vector<double> ys(m);
  for (int i = 0; i < m; ++i) {
    xs[i] = x0 + (i + 0.5) * dx;
    ys[i] = y0 + (i + 0.5) * dy;
  }
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) {
      double val = f(xs[i], ys[j]);
      if (val == 0.0) val = 1e-300;  // keep every node strictly signed
      v[static_cast<std::size_t>(j) * m + i] = val;
    }
  }
  const auto at = [&](int i, int j) { return v[static_cast<std::size_t>(j) * m + i]; };

  std::unordered_map<std::int64_t, std::array<double, 2>> points;
  const auto point_on = [&](int i, int j, bool vert) {
    const std::int64_t id = edge_id(i, j, vert, m);
    if (!points.count(id)) {
      const double a = at(i, j);
      const double b = vert ? at(i, j + 1) : at(i + 1, j);
      const double t = a / (a - b);
      points[id] = vert ? std::array<double, 2>{xs[i], ys[j] + t * dy}
                        : std::array<double, 2>{xs[i] + t * dx, ys[j]};
    }
    return id;
  };

  std::vector<std::array<std::int64_t, 2>> segments;
  for (int j = 0; j + 1 < m; ++j) {
    for (int i = 0; i + 1 < m; ++i) {
      const bool s0 = at(i, j) > 0.0;          // bottom-left
      const bool s1 = at(i + 1, j) > 0.0;      // bottom-right
      const bool s2 = at(i + 1, j + 1) > 0.0;  // top-right
      const bool s3 = at(i, j + 1) > 0.0;      // top-left
      std::vector<std::int64_t> e;
      if (s0 != s1) e.push_back(point_on(i, j, false));          // bottom
      if (s1 != s2) e.push_back(point_on(i + 1, j, true));       // right
      if (s2 != s3) e.push_back(point_on(i, j + 1, false));      // top
      if (s3 != s0) e.push_back(point_on(i, j, true));           // left
      if (e.size() == 2) {
        segments.push_back({e[0], e[1]});
      } else if (e.size() == 4) {
        const double centre = 0.25 * (at(i, j) + at(i + 1, j) + at(i + 1, j + 1) + at(i, j + 1));
        if ((centre > 0.0) == s0) {
          segments.push_back({e[0], e[1]});
          segments.push_back({e[2], e[3]});
        } else {
          segments.push_back({e[0], e[3]});
          segments.push_back({e[1], e[2]});
        }
      }
    }
  }

  std::unordered_map<std::int64_t, std::vector<std::size_t>> touching;
  for (std::size_t s = 0; s < segments.size(); ++s) {
    touching[segments[s][0]].push_back(s);
    touching[segments[s][1]].push_back(s);
  }
  std::vector<bool> used(segments.size(), false);
  std::vector<Polyline> out;

  const auto walk = [&](std::size_t s, std::int64_t from) {
    Polyline line;
    line.points.push_back(points[from]);
    std::int64_t cur = from;
    std::size_t seg = s;
    for (;;) {
      used[seg] = true;
      const std::int64_t next = segments[seg][0] == cur ? segments[seg][1] : segments[seg][0];
      line.points.push_back(points[next]);
      cur = next;
      std::size_t follow = segments.size();
      for (const std::size_t t : touching[cur]) {
        if (!used[t]) {
          follow = t;
          break;
        }
      }
      if (follow == segments.size()) break;
      seg = follow;
    }
    line.closed = cur == from && line.points.size() > 2;
    return line;
  };

  // open chains start at an end with a single segment; the rest are loops
  for (std::size_t s = 0; s < segments.size(); ++s) {
    if (used[s]) continue;
    for (const std::int64_t end : segments[s]) {
      if (touching[end].size() == 1) {
        out.push_back(walk(s, end));
        break;
      }
    }
  }
  for (std::size_t s = 0; s < segments.size(); ++s) {
    if (!used[s]) out.push_back(walk(s, segments[s][0]));
  }
  return out;
}

std::vector<Polyline> nodal_lines(const ThetaFamily& family, int n) {
  constexpr double half = 0.5 * std::numbers::pi;
  return zero_contours([&family](double x, double y) { return family.value(x, y); }, -half, half,
                       -half, half, n);
}

}  // namespace robinsq
