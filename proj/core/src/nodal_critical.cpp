#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "robinsq/nodal.hpp"

namespace robinsq {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalf = 0.5 * kPi;
constexpr int kSeedGrid = 256;
constexpr double kSeedValue = 0.05;
constexpr double kGradTol = 1e-9;
constexpr double kValueTol = 1e-7;
constexpr double kEdgeMargin = 1e-6;
constexpr double kDedup = 1e-5;

// Levenberg-Marquardt on grad Phi = 0 with the analytic Hessian.
bool polish(const ThetaFamily& f, double& x, double& y) {
  const double scale = f.scale();
  auto g = f.gradient(x, y);
  double norm = std::hypot(g[0], g[1]);
  double mu = 1e-12;
  for (int it = 0; it < 200 && norm > 1e-15 * scale; ++it) {
    const auto h = f.hessian(x, y);
    // (H^2 + mu I) d = -H g, H symmetric
    const double a = h[0] * h[0] + h[1] * h[1] + mu;
    const double b = h[0] * h[1] + h[1] * h[2];
    const double c = h[1] * h[1] + h[2] * h[2] + mu;
    const double r0 = -(h[0] * g[0] + h[1] * g[1]);
    const double r1 = -(h[1] * g[0] + h[2] * g[1]);
    const double det = a * c - b * b;
    if (det == 0.0) {
      mu = std::max(mu * 10.0, 1e-12);
      continue;
    }
    const double nx = std::clamp(x + (c * r0 - b * r1) / det, -kHalf, kHalf);
    const double ny = std::clamp(y + (a * r1 - b * r0) / det, -kHalf, kHalf);
    const auto ng = f.gradient(nx, ny);
    const double nn = std::hypot(ng[0], ng[1]);
    if (nn < norm) {
      x = nx;
      y = ny;
      g = ng;
      norm = nn;
      mu = std::max(mu * 0.1, 1e-16);
    } else {
      mu *= 10.0;
      if (mu > 1e12) break;
    }
  }
  return norm <= kGradTol * scale;
}

}  // namespace

std::vector<CriticalPoint> interior_critical_points(const ThetaFamily& family) {
  const int n = kSeedGrid;
  const double step = kPi / n;
  const double scale = family.scale();
  std::vector<double> val((n + 1) * (n + 1));
  std::vector<double> grad((n + 1) * (n + 1));
  const auto at = [n](int i, int j) { return j * (n + 1) + i; };
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n; ++i) {
      const double x = std::clamp(-kHalf + i * step, -kHalf, kHalf);
      const double y = std::clamp(-kHalf + j * step, -kHalf, kHalf);
      val[at(i, j)] = family.value(x, y);
      const auto g = family.gradient(x, y);
      grad[at(i, j)] = g[0] * g[0] + g[1] * g[1];
    }
  }

  std::vector<CriticalPoint> found;
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n; ++i) {
      const double gv = grad[at(i, j)];
      if (std::abs(val[at(i, j)]) > kSeedValue * scale) continue;
      bool is_min = true;
      for (int dj = -1; dj <= 1 && is_min; ++dj) {
        for (int di = -1; di <= 1; ++di) {
          const int ii = i + di;
          const int jj = j + dj;
          if ((di == 0 && dj == 0) || ii < 0 || jj < 0 || ii > n || jj > n) continue;
          if (grad[at(ii, jj)] < gv) {
            is_min = false;
            break;
          }
        }
      }
      if (!is_min) continue;
      double x = std::clamp(-kHalf + i * step, -kHalf, kHalf);
      double y = std::clamp(-kHalf + j * step, -kHalf, kHalf);
      if (!polish(family, x, y)) continue;
      if (std::abs(x) > kHalf - kEdgeMargin || std::abs(y) > kHalf - kEdgeMargin) continue;
      if (std::abs(family.value(x, y)) > kValueTol * scale) continue;
      const bool dup = std::any_of(found.begin(), found.end(), [x, y](const CriticalPoint& c) {
        return std::hypot(c.x - x, c.y - y) < kDedup;
      });
      if (!dup) found.push_back({x, y, 0});
    }
  }

  for (auto& c : found) {
    double r = std::min({1e-2, 0.25 * (kHalf - std::abs(c.x)), 0.25 * (kHalf - std::abs(c.y))});
    for (const auto& o : found) {
      const double d = std::hypot(o.x - c.x, o.y - c.y);
      if (d > 0.0) r = std::min(r, 0.25 * d);
    }
    c.valence = interior_valence(family, c.x, c.y, r);
  }
  std::sort(found.begin(), found.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
  });
  return found;
}

}  // namespace robinsq
