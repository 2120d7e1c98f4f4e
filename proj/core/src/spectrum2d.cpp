#include "robinsq/spectrum2d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "robinsq/robin1d.hpp"

namespace robinsq {

namespace {

constexpr double kPi = std::numbers::pi;

double limit_value(ModeLabel label, RobinParam h) {
  const int shift = h.is_infinite() ? 1 : 0;
  const double p = label.p + shift;
  const double q = label.q + shift;
  return p * p + q * q;
}

}  // namespace

Eigenvalue2D eigenvalue(ModeLabel label, RobinParam h) {
  if (label.p < 0 || label.q < 0) throw std::invalid_argument("eigenvalue: negative mode index");
  Eigenvalue2D e{label, h, 0.0};
  if (h.is_infinite() || h.is_zero()) {
    e.value = limit_value(label, h);
    return e;
  }
  const double ap = solve_alpha(label.p, h).alpha;
  const double aq = label.q == label.p ? ap : solve_alpha(label.q, h).alpha;
  e.value = (ap * ap + aq * aq) / (kPi * kPi);
  return e;
}

const SpectrumEntry* SpectrumTable::find(ModeLabel label) const {
  for (const auto& e : entries) {
    if (e.eigen.label == label) return &e;
  }
  return nullptr;
}

SpectrumTable enumerate_spectrum(RobinParam h, double lambda_max) {
  if (!(lambda_max > 0.0)) throw std::invalid_argument("enumerate_spectrum: lambda_max must be > 0");
  SpectrumTable table;
  table.h = h;
  table.lambda_max = lambda_max;

  // value >= p^2 + q^2, so p^2 <= lambda_max bounds every branch needed.
  const int pmax = static_cast<int>(std::floor(std::sqrt(lambda_max)));
  std::vector<double> alpha_sq(pmax + 1);
  for (int p = 0; p <= pmax; ++p) {
    if (h.is_infinite() || h.is_zero()) continue;
    const double a = solve_alpha(p, h).alpha;
    alpha_sq[p] = a * a / (kPi * kPi);
  }
  for (int p = 0; p <= pmax; ++p) {
    for (int q = 0; q <= pmax; ++q) {
      if (p * p + q * q > lambda_max) continue;
      const ModeLabel label{p, q};
      const double v = (h.is_infinite() || h.is_zero()) ? limit_value(label, h)
                                                        : alpha_sq[p] + alpha_sq[q];
      if (v < lambda_max) table.entries.push_back({Eigenvalue2D{label, h, v}, 0, 0, 0});
    }
  }
  std::sort(table.entries.begin(), table.entries.end(),
            [](const SpectrumEntry& a, const SpectrumEntry& b) {
              if (a.eigen.value != b.eigen.value) return a.eigen.value < b.eigen.value;
              return a.eigen.label < b.eigen.label;
            });

  std::size_t i = 0;
  while (i < table.entries.size()) {
    const double base = table.entries[i].eigen.value;
    const double tol = kClusterRelTol * std::max(1.0, std::abs(base));
    std::size_t j = i + 1;
    while (j < table.entries.size() && table.entries[j].eigen.value - base <= tol) ++j;
    const std::size_t cluster_index = table.clusters.size();
    table.clusters.push_back({i, j - i, base});
    for (std::size_t k = i; k < j; ++k) {
      table.entries[k].k_min = static_cast<int>(i) + 1;
      table.entries[k].k_max = static_cast<int>(j);
      table.entries[k].cluster = cluster_index;
    }
    i = j;
  }
  return table;
}

int counting_function(const SpectrumTable& table, double lambda) {
  if (!(lambda < table.lambda_max || table.lambda_max == std::numeric_limits<double>::infinity())) {
    throw std::invalid_argument("counting_function: table does not reach lambda");
  }
  const auto it = std::lower_bound(
      table.entries.begin(), table.entries.end(), lambda,
      [](const SpectrumEntry& e, double v) { return e.eigen.value < v; });
  return static_cast<int>(it - table.entries.begin());
}

int counting_function(RobinParam h, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("counting_function: lambda must be > 0");
  return counting_function(enumerate_spectrum(h, std::nextafter(lambda, 2.0 * lambda + 1.0)),
                           lambda);
}

WeylReport weyl_bounds_check(double lambda_max, int samples) {
  if (!(lambda_max >= 2.0)) throw std::invalid_argument("weyl_bounds_check: lambda_max must be >= 2");
  WeylReport report;
  report.samples = samples;
  const auto neumann = enumerate_spectrum(RobinParam::neumann(), lambda_max + 1.0);
  const auto dirichlet = enumerate_spectrum(RobinParam::infinity(), lambda_max + 1.0);
  const double quarter_pi = 0.25 * kPi;
  for (int s = 1; s <= samples; ++s) {
    const double lam = 2.0 + (lambda_max - 2.0) * static_cast<double>(s) / samples;
    const double root = std::sqrt(lam);

    const int nn = counting_function(neumann, lam);
    const double n_upper = quarter_pi * lam + 2.0 * std::floor(root) + 1.0;
    const double n_lower = quarter_pi * lam;
    if (!(nn <= n_upper && nn > n_lower)) {
      report.violations.push_back({RobinParam::neumann(), lam, nn, n_lower, n_upper});
    }
    const int nd = counting_function(dirichlet, lam);
    const double d_lower = quarter_pi * lam - 2.0 * root + 1.0;
    if (!(nd > d_lower)) {
      report.violations.push_back({RobinParam::infinity(), lam, nd, d_lower,
                                   std::numeric_limits<double>::quiet_NaN()});
    }
  }
  return report;
}

CutoffReport courant_sharp_cutoff(double lambda_cap) {
  if (!(lambda_cap > 0.0)) throw std::invalid_argument("courant_sharp_cutoff: cap must be > 0");
  CutoffReport r;
  r.lambda_cap = lambda_cap;
  r.count_bound = 0.25 * kPi * lambda_cap + 2.0 * std::floor(std::sqrt(lambda_cap)) + 1.0;
  r.max_index = static_cast<int>(std::floor(r.count_bound)) + 1;
  r.cutoff = r.max_index + 1;
  return r;
}

std::vector<TableRow> table_rows(const SpectrumTable& table) {
  if (!(table.h.is_infinite() || table.h.is_zero())) {
    throw std::invalid_argument("table_rows: only h = 0 or h = inf have integer tables");
  }
  const int shift = table.h.is_infinite() ? 1 : 0;
  std::vector<TableRow> rows;
  rows.reserve(table.entries.size());
  for (const auto& e : table.entries) {
    rows.push_back({e.eigen.label.p + shift, e.eigen.label.q + shift,
                    static_cast<std::int64_t>(std::llround(e.eigen.value)), e.k_min, e.k_max});
  }
  return rows;
}

LimitTables limit_tables(int k_limit) {
  // Grow the eigenvalue window until a complete cluster starts beyond k_limit.
  auto build = [k_limit](RobinParam h) {
    double lmax = 64.0;
    for (;;) {
      const auto table = enumerate_spectrum(h, lmax);
      if (!table.entries.empty() && table.entries.back().k_min > k_limit) {
        auto rows = table_rows(table);
        std::erase_if(rows, [k_limit](const TableRow& r) { return r.k_min > k_limit; });
        return rows;
      }
      lmax *= 2.0;
    }
  };
  return {build(RobinParam::neumann()), build(RobinParam::infinity())};
}

SturmIndices sturm_index_bounds(const SpectrumEntry& entry, const SpectrumTable& table) {
  if (entry.cluster >= table.clusters.size()) {
    throw std::invalid_argument("sturm_index_bounds: entry not in table");
  }
  const auto& c = table.clusters[entry.cluster];
  SturmIndices out{std::numeric_limits<int>::max(), 0};
  for (std::size_t k = c.first; k < c.first + c.size; ++k) {
    const auto& l = table.entries[k].eigen.label;
    out.i_min = std::min({out.i_min, l.p, l.q});
    out.j_max = std::max({out.j_max, l.p, l.q});
  }
  return out;
}

}  // namespace robinsq
