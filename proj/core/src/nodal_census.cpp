#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "robinsq/nodal.hpp"

namespace robinsq {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeroTol = 1e-13;
constexpr int kSub = 4;
constexpr signed char kNodal = 2;

struct Labels {
  std::vector<int> parent;
  std::vector<signed char> kind;
  std::vector<std::int64_t> area;
  std::vector<unsigned char> pure;
  std::vector<unsigned char> ring;

  int make(signed char k) {
    const int id = static_cast<int>(parent.size());
    parent.push_back(id);
    kind.push_back(k);
    area.push_back(0);
    pure.push_back(0);
    ring.push_back(0);
    return id;
  }

  int find(int a) {
    int root = a;
    while (parent[root] != root) root = parent[root];
    while (parent[a] != root) {
      const int next = parent[a];
      parent[a] = root;
      a = next;
    }
    return root;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (area[a] < area[b]) std::swap(a, b);
    parent[b] = a;
    area[a] += area[b];
    pure[a] |= pure[b];
    ring[a] |= ring[b];
  }
};

int sign_class(double v, double tol) { return v > tol ? 1 : (v < -tol ? -1 : 0); }

// +1 / -1 when the nonzero corners agree, 0 when they disagree or all vanish.
signed char cell_class(int a, int b, int c, int d) {
  const bool pos = a > 0 || b > 0 || c > 0 || d > 0;
  const bool neg = a < 0 || b < 0 || c < 0 || d < 0;
  if (pos && !neg) return 1;
  if (neg && !pos) return -1;
  return 0;
}

}  // namespace

GridCount count_at_resolution(const ThetaFamily& family, int resolution) {
  if (resolution < 64 || resolution > kMaxResolution) {
    throw std::invalid_argument("count_at_resolution: resolution must be in [64, 8192]");
  }
  const int coarse_n = resolution;
  const int fine_n = kSub * coarse_n;
  const double step = kPi / fine_n;

  std::vector<double> fp(fine_n + 1);
  std::vector<double> fq(fine_n + 1);
  for (int i = 0; i <= fine_n; ++i) {
    const double t = (i == fine_n) ? 0.5 * kPi : -0.5 * kPi + i * step;
    fp[i] = mode_factor(family.branch_p(), t);
    fq[i] = mode_factor(family.branch_q(), t);
  }
  const double ct = family.cos_theta();
  const double st = family.sin_theta();
  const double tol = kZeroTol * family.scale();
  // i indexes x, j indexes y
  const auto node = [&](int i, int j) {
    return sign_class(ct * fp[i] * fq[j] + st * fq[i] * fp[j], tol);
  };

  GridCount out;
  out.resolution = resolution;
  Labels labels;
  std::vector<signed char> coarse(coarse_n);
  std::vector<signed char> kind(fine_n);
  std::vector<unsigned char> from_pure(fine_n);
  std::vector<signed char> prev_kind(fine_n, 0);
  std::vector<int> prev_label(fine_n, -1);
  std::vector<int> cur_label(fine_n, -1);

  for (int r = 0; r < fine_n; ++r) {
    if (r % kSub == 0) {
      const int j0 = r;
      const int j1 = r + kSub;
      for (int ci = 0; ci < coarse_n; ++ci) {
        const int i0 = ci * kSub;
        const int i1 = i0 + kSub;
        coarse[ci] = cell_class(node(i0, j0), node(i1, j0), node(i0, j1), node(i1, j1));
        if (coarse[ci] == 0) out.refined = true;
      }
    }
    for (int c = 0; c < fine_n; ++c) {
      const signed char k = coarse[c / kSub];
      if (k != 0) {
        kind[c] = k;
        from_pure[c] = 1;
      } else {
        const signed char f = cell_class(node(c, r), node(c + 1, r), node(c, r + 1), node(c + 1, r + 1));
        kind[c] = f == 0 ? kNodal : f;
        from_pure[c] = 0;
      }
    }

    const bool ring_row = (r == 0 || r == fine_n - 1);
    int c = 0;
    while (c < fine_n) {
      const signed char k = kind[c];
      int e = c;
      while (e + 1 < fine_n && kind[e + 1] == k) ++e;
      const int id = labels.make(k);
      labels.area[id] = e - c + 1;
      labels.ring[id] = ring_row || c == 0 || e == fine_n - 1;
      for (int x = c; x <= e; ++x) {
        if (from_pure[x]) {
          labels.pure[id] = 1;
          break;
        }
      }
      // 4-connectivity for signed cells, 8-connectivity for nodal cells
      const int lo = (k == kNodal) ? std::max(0, c - 1) : c;
      const int hi = (k == kNodal) ? std::min(fine_n - 1, e + 1) : e;
      int last = -1;
      for (int x = lo; x <= hi; ++x) {
        if (prev_kind[x] == k && prev_label[x] != last) {
          labels.unite(id, prev_label[x]);
          last = prev_label[x];
        }
      }
      for (int x = c; x <= e; ++x) cur_label[x] = id;
      c = e + 1;
    }
    prev_kind.assign(kind.begin(), kind.end());
    std::swap(prev_label, cur_label);
  }

  const double cell_area = step * step;
  for (int id = 0; id < static_cast<int>(labels.parent.size()); ++id) {
    if (labels.find(id) != id) continue;
    if (labels.kind[id] == kNodal) {
      ++out.nodal_components;
      if (!labels.ring[id]) ++out.nodal_closed;
      continue;
    }
    if (!labels.pure[id]) continue;
    out.info.push_back({labels.kind[id], static_cast<double>(labels.area[id]) * cell_area,
                        labels.ring[id] != 0});
  }
  out.domains = static_cast<int>(out.info.size());
  return out;
}

NodalCensus count_nodal_domains(const ThetaFamily& family, int resolution) {
  if (resolution < 64 || resolution > kMaxResolution) {
    throw std::invalid_argument("count_nodal_domains: resolution must be in [64, 8192]");
  }
  std::vector<int> levels;
  if (resolution * 2 > kMaxResolution) {
    levels = {resolution / 2, resolution};
  } else {
    levels = {resolution, resolution * 2};
    if (resolution * 4 <= kMaxResolution) levels.push_back(resolution * 4);
  }

  GridCount prev = count_at_resolution(family, levels[0]);
  const GridCount* stable = nullptr;
  GridCount next;
  std::string trail = std::to_string(prev.domains);
  for (std::size_t i = 1; i < levels.size(); ++i) {
    next = count_at_resolution(family, levels[i]);
    trail += " -> " + std::to_string(next.domains);
    if (next.domains == prev.domains) {
      stable = &next;
      break;
    }
    prev = std::move(next);
  }
  if (stable == nullptr) {
    throw UnstableCount("nodal count did not stabilise (" + trail + ") at theta = " +
                        std::to_string(family.theta()));
  }

  NodalCensus census;
  census.domains = stable->domains;
  census.resolution = prev.resolution;
  census.refined = stable->refined;
  census.info = stable->info;
  census.nodal_closed = stable->nodal_closed;
  for (const auto& d : census.info) {
    if (d.outer) {
      ++census.outer_domains;
    } else {
      ++census.inner_domains;
    }
  }
  census.boundary_zeros = static_cast<int>(boundary_points(family).size());
  census.interior_critical = static_cast<int>(interior_critical_points(family).size());
  return census;
}

}  // namespace robinsq
