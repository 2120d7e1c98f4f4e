#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "robinsq/nodal.hpp"
#include "robinsq/roots.hpp"

namespace robinsq {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalf = 0.5 * kPi;
constexpr int kSamples = 4096;
constexpr double kTangentTol = 1e-8;
constexpr double kCornerTol = 1e-9;
constexpr double kMergeGap = 1e-5;
constexpr double kArcRadius = 1e-3;

std::array<double, 2> side_point(Side side, double t) {
  switch (side) {
    case Side::left: return {-kHalf, t};
    case Side::right: return {kHalf, t};
    case Side::bottom: return {t, -kHalf};
    case Side::top: return {t, kHalf};
  }
  return {0.0, 0.0};
}

bool vertical(Side side) { return side == Side::left || side == Side::right; }

struct Root {
  double t = 0.0;
  bool tangential = false;
};

// Zeros of g on [-pi/2, pi/2]: sign changes plus touching zeros (local
// minima of |g| below tol where dg changes sign). Endpoints flagged in
// skip_lo / skip_hi are left out of the sign chain.
std::vector<Root> zeros_on_side(const std::function<double(double)>& g,
                                const std::function<double(double)>& dg, double scale,
                                bool skip_lo, bool skip_hi) {
  const double zero_tol = 1e-13 * scale;
  std::vector<double> t(kSamples + 1);
  std::vector<double> v(kSamples + 1);
  for (int i = 0; i <= kSamples; ++i) {
    t[i] = (i == kSamples) ? kHalf : -kHalf + kPi * i / kSamples;
    v[i] = g(t[i]);
  }
  const int first = skip_lo ? 1 : 0;
  const int last = skip_hi ? kSamples - 1 : kSamples;

  std::vector<Root> roots;
  int prev = -1;  // index of last sample with a nonzero sign
  for (int i = first; i <= last; ++i) {
    if (std::abs(v[i]) <= zero_tol) continue;
    if (prev >= 0 && (v[i] > 0.0) != (v[prev] > 0.0)) {
      double r;
      if (i - prev > 1) {
        r = t[(prev + i) / 2];
      } else {
        r = bisect(g, t[prev], t[i], {.x_tolerance = 1e-14});
      }
      roots.push_back({r, false});
    } else if (prev >= 0 && i - prev > 1) {
      roots.push_back({t[(prev + i) / 2], true});  // exact zero samples without a sign change
    }
    prev = i;
  }

  // touching zeros between samples
  for (int i = first + 1; i < last; ++i) {
    const double a = std::abs(v[i - 1]);
    const double b = std::abs(v[i]);
    const double c = std::abs(v[i + 1]);
    if (!(b <= a && b < c) || b <= zero_tol) continue;
    if ((v[i - 1] > 0.0) != (v[i] > 0.0) || (v[i + 1] > 0.0) != (v[i] > 0.0)) continue;
    const double d0 = dg(t[i - 1]);
    const double d1 = dg(t[i + 1]);
    if ((d0 > 0.0) == (d1 > 0.0)) continue;
    const double tm = bisect(dg, t[i - 1], t[i + 1], {.x_tolerance = 1e-15});
    if (std::abs(g(tm)) <= kTangentTol * scale) roots.push_back({tm, true});
  }

  std::sort(roots.begin(), roots.end(), [](const Root& x, const Root& y) { return x.t < y.t; });
  // a pair of sign changes closer than kMergeGap is one touching zero
  std::vector<Root> merged;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i + 1 < roots.size() && roots[i + 1].t - roots[i].t < kMergeGap) {
      merged.push_back({0.5 * (roots[i].t + roots[i + 1].t), true});
      ++i;
      continue;
    }
    merged.push_back(roots[i]);
  }
  return merged;
}

bool corner_is_zero(const ThetaFamily& f, double x, double y) {
  return std::abs(f.value(x, y)) <= kCornerTol * f.scale();
}

// Sign changes of Phi along an arc of radius r about (cx, cy), angles in
// (a0, a1), or the full circle when closed is set.
int arc_changes(const ThetaFamily& f, double cx, double cy, double r, double a0, double a1,
                bool closed) {
  constexpr int kArc = 720;
  const double tol = 1e-13 * f.scale();
  int changes = 0;
  int first_sign = 0;
  int last_sign = 0;
  for (int i = 0; i < kArc; ++i) {
    const double a = closed ? a0 + (a1 - a0) * i / kArc : a0 + (a1 - a0) * (i + 0.5) / kArc;
    double x = cx + r * std::cos(a);
    double y = cy + r * std::sin(a);
    x = std::clamp(x, -kHalf, kHalf);
    y = std::clamp(y, -kHalf, kHalf);
    const double v = f.value(x, y);
    const int s = v > tol ? 1 : (v < -tol ? -1 : 0);
    if (s == 0) continue;
    if (first_sign == 0) first_sign = s;
    if (last_sign != 0 && s != last_sign) ++changes;
    last_sign = s;
  }
  if (closed && first_sign != 0 && last_sign != 0 && first_sign != last_sign) ++changes;
  return changes;
}

// Angular range of the part of a small circle about a boundary point that
// lies inside the square.
std::array<double, 2> inward_arc(const BoundaryPoint& b) {
  const bool at_left = b.x <= -kHalf;
  const bool at_right = b.x >= kHalf;
  const bool at_bottom = b.y <= -kHalf;
  const bool at_top = b.y >= kHalf;
  if (at_right && at_top) return {kPi, 1.5 * kPi};
  if (at_left && at_top) return {1.5 * kPi, 2.0 * kPi};
  if (at_left && at_bottom) return {0.0, kHalf};
  if (at_right && at_bottom) return {kHalf, kPi};
  if (at_left) return {-kHalf, kHalf};
  if (at_right) return {kHalf, 1.5 * kPi};
  if (at_bottom) return {0.0, kPi};
  return {kPi, 2.0 * kPi};  // top
}

}  // namespace

int boundary_valence(const ThetaFamily& family, const BoundaryPoint& point, double radius) {
  const auto arc = inward_arc(point);
  return arc_changes(family, point.x, point.y, radius, arc[0], arc[1], false);
}

int interior_valence(const ThetaFamily& family, double x, double y, double radius) {
  return arc_changes(family, x, y, radius, 0.0, 2.0 * kPi, true);
}

SideZeros boundary_zero_count(const ThetaFamily& family, Side side) {
  if (family.h().is_infinite()) {
    throw UnsupportedCase("boundary_zero_count: Phi vanishes on the whole boundary for h = inf");
  }
  const auto g = [&family, side](double t) {
    const auto pt = side_point(side, t);
    return family.value(pt[0], pt[1]);
  };
  const auto dg = [&family, side](double t) {
    const auto pt = side_point(side, t);
    return family.gradient(pt[0], pt[1])[vertical(side) ? 1 : 0];
  };
  const auto lo = side_point(side, -kHalf);
  const auto hi = side_point(side, kHalf);
  const bool skip_lo = corner_is_zero(family, lo[0], lo[1]);
  const bool skip_hi = corner_is_zero(family, hi[0], hi[1]);

  SideZeros out;
  out.side = side;
  for (const auto& r : zeros_on_side(g, dg, family.scale(), skip_lo, skip_hi)) {
    if ((skip_lo && r.t <= -kHalf) || (skip_hi && r.t >= kHalf)) continue;
    const auto pt = side_point(side, r.t);
    out.zeros.push_back({pt[0], pt[1], false, r.tangential});
  }
  return out;
}

std::vector<BoundaryPoint> boundary_points(const ThetaFamily& family) {
  std::vector<BoundaryPoint> out;
  const std::array<Side, 4> sides{Side::bottom, Side::right, Side::top, Side::left};
  const std::array<std::array<double, 2>, 4> corners{
      {{-kHalf, -kHalf}, {kHalf, -kHalf}, {kHalf, kHalf}, {-kHalf, kHalf}}};

  if (!family.h().is_infinite()) {
    for (const Side s : sides) {
      const auto z = boundary_zero_count(family, s);
      out.insert(out.end(), z.zeros.begin(), z.zeros.end());
    }
    for (const auto& c : corners) {
      if (corner_is_zero(family, c[0], c[1])) out.push_back({c[0], c[1], true, false});
    }
    return out;
  }

  // Dirichlet: nodal arcs reach the side where the normal derivative changes sign.
  for (const Side s : sides) {
    const int axis = vertical(s) ? 0 : 1;
    const auto g = [&family, s, axis](double t) {
      const auto pt = side_point(s, t);
      return family.gradient(pt[0], pt[1])[axis];
    };
    const auto dg = [&family, s, axis](double t) {
      const auto pt = side_point(s, t);
      return family.hessian(pt[0], pt[1])[1];
    };
    for (const auto& r : zeros_on_side(g, dg, family.scale() * 64.0, true, true)) {
      if (r.tangential) continue;
      const auto pt = side_point(s, r.t);
      out.push_back({pt[0], pt[1], false, false});
    }
  }
  for (const auto& c : corners) {
    const BoundaryPoint b{c[0], c[1], true, false};
    if (boundary_valence(family, b, kArcRadius) > 0) out.push_back(b);
  }
  return out;
}

}  // namespace robinsq
