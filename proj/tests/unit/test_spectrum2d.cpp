#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <tuple>

#include "gen.hpp"
#include "oracle.hpp"
#include "robinsq/spectrum2d.hpp"

using namespace robinsq;
using robinsq::testing::for_all;
using robinsq::testing::Gen;
using robinsq::testing::trial_tag;

namespace {

constexpr double kPi = std::numbers::pi;

// Integer tables by brute force: sort m^2 + n^2 and hand out k ranges per value.
std::vector<TableRow> brute_table(int first, int k_limit) {
  std::map<std::int64_t, std::vector<std::pair<int, int>>> by_value;
  for (int m = first; m <= 40; ++m) {
    for (int n = first; n <= 40; ++n) by_value[m * m + n * n].push_back({m, n});
  }
  std::vector<TableRow> rows;
  int k = 1;
  for (const auto& [value, pairs] : by_value) {
    if (k > k_limit) break;
    const int size = static_cast<int>(pairs.size());
    for (const auto& [m, n] : pairs) rows.push_back({m, n, value, k, k + size - 1});
    k += size;
  }
  return rows;
}

std::set<std::tuple<int, int, std::int64_t, int, int>> as_set(const std::vector<TableRow>& rows) {
  std::set<std::tuple<int, int, std::int64_t, int, int>> s;
  for (const auto& r : rows) s.insert({r.m, r.n, r.value, r.k_min, r.k_max});
  return s;
}

}  // namespace

TEST(Eigenvalue, ExactIntegersAtLimits) {
  EXPECT_EQ(eigenvalue({2, 1}, RobinParam::neumann()).value, 5.0);
  EXPECT_EQ(eigenvalue({2, 1}, RobinParam::infinity()).value, 13.0);
  EXPECT_EQ(eigenvalue({0, 0}, RobinParam::infinity()).value, 2.0);
  EXPECT_THROW(eigenvalue({-1, 0}, RobinParam::neumann()), std::invalid_argument);
}

TEST(Eigenvalue, MatchesOracleAndIsSymmetric) {
  for_all(21, 200, [](Gen& g, int t) {
    const ModeLabel l{g.integer(0, 9), g.integer(0, 9)};
    const double h = g.log_uniform(1e-3, 1e3);
    const double v = eigenvalue(l, RobinParam::finite(h)).value;
    EXPECT_NEAR(v, oracle::lambda(l.p, l.q, h), 1e-10 * v) << trial_tag(21, t);
    EXPECT_EQ(v, eigenvalue(l.swapped(), RobinParam::finite(h)).value);
    EXPECT_GE(v, l.p * l.p + l.q * l.q);
    EXPECT_LE(v, (l.p + 1) * (l.p + 1) + (l.q + 1) * (l.q + 1));
  });
}

TEST(EnumerateSpectrum, NeumannHead) {
  const auto t = enumerate_spectrum(RobinParam::neumann(), 10.0);
  ASSERT_GE(t.entries.size(), 6u);
  EXPECT_EQ(t.entries[0].eigen.label, (ModeLabel{0, 0}));
  EXPECT_EQ(t.entries[0].k_min, 1);
  EXPECT_EQ(t.entries[1].k_min, 2);
  EXPECT_EQ(t.entries[1].k_max, 3);
  EXPECT_EQ(t.find({1, 1})->k_min, 4);
  EXPECT_EQ(t.find({2, 0})->k_max, 6);
  for (const auto& e : t.entries) EXPECT_LT(e.eigen.value, 10.0);
  EXPECT_EQ(t.find({3, 1}), nullptr);
}

TEST(EnumerateSpectrum, LabelsAreContiguousAndSorted) {
  for_all(22, 30, [](Gen& g, int t) {
    const double h = g.log_uniform(1e-2, 1e2);
    const auto table = enumerate_spectrum(RobinParam::finite(h), g.uniform(20.0, 120.0));
    int next = 1;
    for (std::size_t c = 0; c < table.clusters.size(); ++c) {
      const auto& cl = table.clusters[c];
      for (std::size_t i = cl.first; i < cl.first + cl.size; ++i) {
        const auto& e = table.entries[i];
        EXPECT_EQ(e.k_min, next) << trial_tag(22, t);
        EXPECT_EQ(e.k_max, next + static_cast<int>(cl.size) - 1);
        EXPECT_EQ(e.cluster, c);
      }
      next += static_cast<int>(cl.size);
    }
    EXPECT_EQ(next - 1, static_cast<int>(table.entries.size()));
    EXPECT_TRUE(std::is_sorted(table.entries.begin(), table.entries.end(),
                               [](const SpectrumEntry& a, const SpectrumEntry& b) {
                                 return a.eigen.value < b.eigen.value;
                               }));
  });
}

TEST(CountingFunction, SmallCases) {
  EXPECT_EQ(counting_function(RobinParam::neumann(), 2.5), 4);
  EXPECT_EQ(counting_function(RobinParam::infinity(), 2.0000001), 1);
  EXPECT_EQ(counting_function(RobinParam::infinity(), 2.0), 0);
  EXPECT_EQ(counting_function(RobinParam::neumann(), 1.0), 1);
}

TEST(CountingFunction, MatchesBruteCountAtRandomLevels) {
  for_all(23, 40, [](Gen& g, int t) {
    const double h = g.log_uniform(1e-2, 1e2);
    const double lambda = g.uniform(1.0, 80.0);
    int brute = 0;
    for (int p = 0; p <= 10; ++p) {
      for (int q = 0; q <= 10; ++q) brute += oracle::lambda(p, q, h) < lambda ? 1 : 0;
    }
    EXPECT_EQ(counting_function(RobinParam::finite(h), lambda), brute) << trial_tag(23, t);
  });
}

TEST(Weyl, SandwichHoldsOnBothLimits) {
  const auto r = weyl_bounds_check(600.0, 2000);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.samples, 2000);
  // vacuous lower Dirichlet bound at the bottom
  EXPECT_LT(kPi / 4 * 2 - 2 * std::sqrt(2.0) + 1, 0.0);
}

TEST(CourantSharpCutoff, DefaultAndOtherCaps) {
  const auto c = courant_sharp_cutoff();
  EXPECT_EQ(c.cutoff, 520);
  EXPECT_LT(c.count_bound, 518.67);
  EXPECT_NEAR(c.count_bound, kPi / 4 * 598 + 2 * 24 + 1, 1e-12);
  const auto c50 = courant_sharp_cutoff(50.0);
  EXPECT_EQ(c50.cutoff, static_cast<int>(std::floor(kPi / 4 * 50 + 2 * 7 + 2)) + 1);
  EXPECT_GE(courant_sharp_cutoff(2.0).cutoff, 4);
}

TEST(LimitTables, MatchBruteForceIntegers) {
  const auto t = limit_tables(129);
  EXPECT_EQ(as_set(t.neumann), as_set(brute_table(0, 129)));
  EXPECT_EQ(as_set(t.dirichlet), as_set(brute_table(1, 129)));
  EXPECT_EQ(t.neumann.size(), 129u);
  EXPECT_EQ(t.dirichlet.size(), 129u);
}

TEST(LimitTables, TableRowsFromSpectrum) {
  const auto d = table_rows(enumerate_spectrum(RobinParam::infinity(), 66.0));
  const auto full = limit_tables(200).dirichlet;
  for (const auto& r : d) {
    EXPECT_TRUE(std::find(full.begin(), full.end(), r) != full.end()) << r.m << "," << r.n;
    EXPECT_GE(r.m, 1);
  }
  EXPECT_THROW(table_rows(enumerate_spectrum(RobinParam::finite(1.0), 10.0)), std::invalid_argument);
}

TEST(SturmIndices, ClusterSpan) {
  const auto t = enumerate_spectrum(RobinParam::neumann(), 30.0);
  // 25 = 5^2 + 0^2 = 4^2 + 3^2
  const auto s = sturm_index_bounds(*t.find({4, 3}), t);
  EXPECT_EQ(s.i_min, 0);
  EXPECT_EQ(s.j_max, 5);
  const auto u = sturm_index_bounds(*t.find({1, 1}), t);
  EXPECT_EQ(u.i_min, 1);
  EXPECT_EQ(u.j_max, 1);
}
