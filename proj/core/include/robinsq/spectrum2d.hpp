#pragma once

// Robin spectrum of the square S = (-pi/2, pi/2)^2:
//   lambda_{p,q,h} = (alpha_p(h)^2 + alpha_q(h)^2) / pi^2.

#include <compare>
#include <cstdint>
#include <vector>

#include "robinsq/robin_param.hpp"

namespace robinsq {

struct ModeLabel {
  int p = 0;
  int q = 0;

  friend constexpr auto operator<=>(const ModeLabel&, const ModeLabel&) = default;
  /// (min, max) ordering of the two indices.
  constexpr ModeLabel canonical() const { return p <= q ? *this : ModeLabel{q, p}; }
  constexpr ModeLabel swapped() const { return {q, p}; }
};

struct Eigenvalue2D {
  ModeLabel label;
  RobinParam h;
  double value = 0.0;
};

/// Exact integer value for h in {0, inf}; otherwise computed from alpha.
Eigenvalue2D eigenvalue(ModeLabel label, RobinParam h);

/// Labels whose eigenvalues agree within the cluster tolerance.
struct Cluster {
  std::size_t first = 0;  // index into SpectrumTable::entries
  std::size_t size = 0;
  double value = 0.0;
};

struct SpectrumEntry {
  Eigenvalue2D eigen;
  int k_min = 0;  // 1-based labelling range shared by the cluster
  int k_max = 0;
  std::size_t cluster = 0;
};

struct SpectrumTable {
  RobinParam h;
  double lambda_max = 0.0;
  std::vector<SpectrumEntry> entries;  // sorted by value, ties by (p, q)
  std::vector<Cluster> clusters;

  /// Entry for a label, or nullptr when the label is not in the table.
  const SpectrumEntry* find(ModeLabel label) const;
};

inline constexpr double kClusterRelTol = 1e-9;

/// All eigenvalues strictly below lambda_max, sorted, clustered and labelled.
SpectrumTable enumerate_spectrum(RobinParam h, double lambda_max);

/// N(lambda) = #{k : lambda_k < lambda}.
int counting_function(RobinParam h, double lambda);
/// Counting function over a prebuilt table (table.lambda_max must exceed lambda).
int counting_function(const SpectrumTable& table, double lambda);

struct WeylViolation {
  RobinParam h;
  double lambda = 0.0;
  int count = 0;
  double lower = 0.0;
  double upper = 0.0;  // NaN when only a lower bound applies
};

struct WeylReport {
  int samples = 0;
  std::vector<WeylViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks  pi/4 L + 2 floor(sqrt L) + 1 >= N^Ne(L) > pi/4 L  and
/// N^D(L) > pi/4 L - 2 sqrt L + 1  at `samples` equispaced L in (2, lambda_max].
WeylReport weyl_bounds_check(double lambda_max, int samples = 10000);

struct CutoffReport {
  double lambda_cap = 0.0;
  double count_bound = 0.0;  // pi/4 cap + 2 floor(sqrt cap) + 1
  int max_index = 0;         // largest n with n - 1 <= count_bound
  int cutoff = 0;            // every k >= cutoff is excluded
};

/// Index cutoff implied by "no Courant-sharp eigenvalue at or above lambda_cap"
/// together with the Neumann upper Weyl bound. Default cap 598 gives 520.
CutoffReport courant_sharp_cutoff(double lambda_cap = 598.0);

struct TableRow {
  int m = 0;
  int n = 0;
  std::int64_t value = 0;  // m^2 + n^2
  int k_min = 0;
  int k_max = 0;

  friend constexpr bool operator==(const TableRow&, const TableRow&) = default;
};

struct LimitTables {
  std::vector<TableRow> neumann;    // (m, n) >= (0, 0)
  std::vector<TableRow> dirichlet;  // (m, n) >= (1, 1), i.e. Robin (p+1, q+1)
};

/// Neumann and Dirichlet tables in exact integer arithmetic, rows with
/// k_min <= k_limit.
LimitTables limit_tables(int k_limit = 129);

/// Table rows generated from an enumerated spectrum at h in {0, inf}; the
/// Dirichlet case shifts labels to (p+1, q+1).
std::vector<TableRow> table_rows(const SpectrumTable& table);

struct SturmIndices {
  int i_min = 0;  // smallest index occurring in the cluster's labels
  int j_max = 0;  // largest index occurring in the cluster's labels
};

/// (i_n, j_n) for the cluster containing `entry`.
SturmIndices sturm_index_bounds(const SpectrumEntry& entry, const SpectrumTable& table);

}  // namespace robinsq
