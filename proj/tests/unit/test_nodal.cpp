#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <queue>
#include <vector>

#include "gen.hpp"
#include "robinsq/nodal.hpp"

using namespace robinsq;
using robinsq::testing::for_all;
using robinsq::testing::Gen;
using robinsq::testing::trial_tag;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalf = kPi / 2;

// Breadth-first flood fill of sign classes on an n x n pixel grid.
int flood_fill_count(const ThetaFamily& f, int n) {
  std::vector<signed char> sign(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double x = -kHalf + (i + 0.5) * kPi / n;
      const double y = -kHalf + (j + 0.5) * kPi / n;
      sign[static_cast<std::size_t>(j) * n + i] = f.value(x, y) > 0 ? 1 : -1;
    }
  }
  std::vector<bool> seen(sign.size(), false);
  int count = 0;
  for (std::size_t start = 0; start < sign.size(); ++start) {
    if (seen[start]) continue;
    ++count;
    std::queue<std::size_t> todo;
    todo.push(start);
    seen[start] = true;
    while (!todo.empty()) {
      const std::size_t c = todo.front();
      todo.pop();
      const int i = static_cast<int>(c % n);
      const int j = static_cast<int>(c / n);
      const int di[] = {1, -1, 0, 0};
      const int dj[] = {0, 0, 1, -1};
      for (int k = 0; k < 4; ++k) {
        const int a = i + di[k];
        const int b = j + dj[k];
        if (a < 0 || b < 0 || a >= n || b >= n) continue;
        const std::size_t d = static_cast<std::size_t>(b) * n + a;
        if (!seen[d] && sign[d] == sign[c]) {
          seen[d] = true;
          todo.push(d);
        }
      }
    }
  }
  return count;
}

}  // namespace

TEST(ThetaFamily, ReducesThetaAndFlipsSign) {
  const ThetaFamily a(RobinParam::finite(2.0), 0.4, 1, 2);
  const ThetaFamily b(RobinParam::finite(2.0), 0.4 + kPi, 1, 2);
  EXPECT_NEAR(b.theta(), 0.4, 1e-15);
  EXPECT_NEAR(a(0.3, -0.7), -b(0.3, -0.7), 1e-14);
  EXPECT_THROW(a(2.0, 0.0), std::domain_error);
  EXPECT_THROW(ThetaFamily(RobinParam::finite(1.0), std::nan(""), 0, 1), std::invalid_argument);
}

TEST(ThetaFamily, SymmetryUnderPointReflection) {
  for_all(51, 200, [](Gen& g, int t) {
    const int p = g.integer(0, 6);
    const int q = g.integer(0, 6);
    const ThetaFamily f(RobinParam::finite(g.log_uniform(1e-2, 1e2)), g.uniform(0.0, kPi), p, q);
    const double x = g.coord();
    const double y = g.coord();
    const double sign = f.symmetric_factor() == 0 ? 1.0 : -1.0;
    EXPECT_NEAR(f.value(-x, -y), sign * f.value(x, y), 1e-13) << trial_tag(51, t);
  });
}

TEST(ThetaFamily, IsAnEigenfunction) {
  for_all(52, 100, [](Gen& g, int t) {
    const ThetaFamily f(RobinParam::finite(g.log_uniform(1e-2, 1e2)), g.uniform(0.0, kPi),
                        g.integer(0, 6), g.integer(0, 6));
    const double x = g.coord();
    const double y = g.coord();
    const auto hs = f.hessian(x, y);
    // -Laplacian Phi = lambda Phi
    EXPECT_NEAR(-(hs[0] + hs[2]), f.lambda() * f.value(x, y), 1e-11 * (1 + f.lambda()))
        << trial_tag(52, t);
  });
}

TEST(ThetaFamily, DerivativesMatchFiniteDifferences) {
  for_all(53, 100, [](Gen& g, int t) {
    const ThetaFamily f(RobinParam::finite(g.log_uniform(1e-2, 1e2)), g.uniform(0.0, kPi),
                        g.integer(0, 6), g.integer(0, 6));
    const double x = g.coord(0.01);
    const double y = g.coord(0.01);
    const double e = 1e-5;
    const auto gr = f.gradient(x, y);
    const auto hs = f.hessian(x, y);
    const double tol = 1e-6 * (1 + f.lambda());
    EXPECT_NEAR(gr[0], (f.value(x + e, y) - f.value(x - e, y)) / (2 * e), tol) << trial_tag(53, t);
    EXPECT_NEAR(gr[1], (f.value(x, y + e) - f.value(x, y - e)) / (2 * e), tol);
    EXPECT_NEAR(hs[1], (f.gradient(x, y + e)[0] - f.gradient(x, y - e)[0]) / (2 * e), tol);
  });
}

TEST(Census, SimpleModes) {
  EXPECT_EQ(count_nodal_domains(ThetaFamily(RobinParam::finite(1.0), 0.0, 0, 0), 128).domains, 1);
  EXPECT_EQ(count_nodal_domains(ThetaFamily(RobinParam::finite(1.0), 0.0, 1, 0), 128).domains, 2);
  EXPECT_EQ(count_nodal_domains(ThetaFamily(RobinParam::finite(1.0), 0.0, 2, 3), 128).domains, 12);
  EXPECT_EQ(count_nodal_domains(ThetaFamily(RobinParam::infinity(), 0.0, 2, 2), 128).domains, 9);
}

TEST(Census, FifthDirichletFamily) {
  const auto d = count_nodal_domains(ThetaFamily(RobinParam::infinity(), kPi / 4, 0, 2));
  EXPECT_EQ(d.domains, 2);
  const auto c = count_nodal_domains(ThetaFamily(RobinParam::infinity(), 3 * kPi / 4, 0, 2));
  EXPECT_EQ(c.domains, 4);
  EXPECT_EQ(c.boundary_zeros, 4);
  EXPECT_EQ(c.interior_critical, 1);
  EXPECT_EQ(c.inner_domains + c.outer_domains, c.domains);
}

TEST(Census, NineDomainsOfU22) {
  for (const double h : {0.5, 1.0, 1.5}) {
    EXPECT_EQ(count_nodal_domains(ThetaFamily(RobinParam::finite(h), 0.0, 2, 2)).domains, 9) << h;
  }
}

TEST(Census, AgreesWithFloodFillOracle) {
  struct Case {
    double h;
    double theta;
    int p;
    int q;
  };
  const Case cases[] = {{2.0, 0.3, 1, 2}, {5.0, 1.0, 0, 3}, {0.5, 0.7, 2, 4},
                        {10.0, 2.2, 1, 3}, {1.0, 0.9, 0, 4}, {3.0, 2.7, 2, 3}};
  for (const auto& c : cases) {
    const ThetaFamily f(RobinParam::finite(c.h), c.theta, c.p, c.q);
    EXPECT_EQ(count_nodal_domains(f, 256).domains, flood_fill_count(f, 1200))
        << c.p << "," << c.q << " theta " << c.theta;
  }
}

TEST(Census, InvariantUnderSignFlipAndSwap) {
  for_all(54, 12, [](Gen& g, int t) {
    const double h = g.log_uniform(0.1, 50.0);
    const double theta = g.uniform(0.05, kPi / 2 - 0.05);
    const int p = g.integer(0, 3);
    const int q = g.integer(0, 3);
    const ThetaFamily f(RobinParam::finite(h), theta, p, q);
    const ThetaFamily flipped(RobinParam::finite(h), theta + kPi, p, q);
    // swapping the labels and theta -> pi/2 - theta reflects the picture in y = x
    const ThetaFamily swapped(RobinParam::finite(h), kPi / 2 - theta, q, p);
    const int n = count_nodal_domains(f, 256).domains;
    EXPECT_EQ(count_nodal_domains(flipped, 256).domains, n) << trial_tag(54, t);
    EXPECT_EQ(count_nodal_domains(swapped, 256).domains, n) << trial_tag(54, t);
  });
}

TEST(Census, ResolutionBounds) {
  const ThetaFamily f(RobinParam::finite(1.0), 0.0, 1, 1);
  EXPECT_THROW(count_nodal_domains(f, 32), std::invalid_argument);
  EXPECT_THROW(count_at_resolution(f, 10000), std::invalid_argument);
  EXPECT_EQ(count_at_resolution(f, 64).domains, count_at_resolution(f, 128).domains);
}

TEST(Boundary, SideZerosFollowSturmBound) {
  // on x = pi/2 the family restricts to a combination of f_0 and f_2: at most 2 zeros
  const ThetaFamily f(RobinParam::finite(20.0), 0.0, 0, 2);
  EXPECT_EQ(boundary_zero_count(f, Side::right).count(), 2);
  EXPECT_EQ(boundary_zero_count(f, Side::top).count(), 0);
  for_all(55, 40, [](Gen& g, int t) {
    const int p = g.integer(0, 6);
    const int q = g.integer(0, 6);
    const ThetaFamily r(RobinParam::finite(g.log_uniform(0.1, 100.0)), g.uniform(0.0, kPi), p, q);
    for (const Side s : {Side::left, Side::right, Side::bottom, Side::top}) {
      EXPECT_LE(boundary_zero_count(r, s).count(), std::max(p, q)) << trial_tag(55, t);
    }
  });
}

TEST(Boundary, DirichletSidesUnsupported) {
  const ThetaFamily f(RobinParam::infinity(), 0.3, 0, 2);
  EXPECT_THROW(boundary_zero_count(f, Side::left), UnsupportedCase);
  EXPECT_FALSE(boundary_points(f).empty());
}

TEST(CriticalPoints, OriginForAntidiagonalFifthFamily) {
  const ThetaFamily f(RobinParam::finite(20.0), 3 * kPi / 4, 0, 2);
  const auto cps = interior_critical_points(f);
  ASSERT_EQ(cps.size(), 1u);
  EXPECT_NEAR(cps[0].x, 0.0, 1e-8);
  EXPECT_NEAR(cps[0].y, 0.0, 1e-8);
  EXPECT_EQ(cps[0].valence, 4);
  EXPECT_EQ(interior_valence(f, 0.0, 0.0, 1e-2), 4);
}

TEST(Euler, FormulaMatchesCensus) {
  const ThetaFamily cases[] = {
      ThetaFamily(RobinParam::infinity(), 3 * kPi / 4, 0, 2),
      ThetaFamily(RobinParam::finite(100.0), 3 * kPi / 4, 0, 2),
      ThetaFamily(RobinParam::finite(1.0), 0.0, 2, 2),
      ThetaFamily(RobinParam::finite(20.0), 0.4, 5, 1),
      ThetaFamily(RobinParam::finite(3.0), 1.1, 1, 2),
  };
  for (const auto& f : cases) {
    const auto census = count_nodal_domains(f);
    const auto e = euler_count_check(f, census);
    EXPECT_TRUE(e.match) << f.p() << "," << f.q() << " theta " << f.theta() << ": predicted "
                         << e.predicted << " vs " << census.domains;
    EXPECT_EQ(e.rho.size(), e.boundary.size());
  }
}
