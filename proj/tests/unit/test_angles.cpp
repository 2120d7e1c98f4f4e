#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracle.hpp"
#include "robinsq/nodal_angles.hpp"

using namespace robinsq;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(CriticalAngles5, DirichletLimit) {
  const auto c = critical_angles_5(RobinParam::infinity());
  EXPECT_EQ(c.q2, -3.0);
  EXPECT_NEAR(c.theta1, std::atan(1.0 / 3.0), 1e-15);
  EXPECT_NEAR(c.theta2, kPi / 2 - std::atan(1.0 / 3.0), 1e-15);
  EXPECT_EQ(c.theta3, 3 * kPi / 4);
  EXPECT_THROW(critical_angles_5(RobinParam::neumann()), std::domain_error);
}

TEST(CriticalAngles5, FiniteHFromOracleBranches) {
  for (const double h : {20.0, 100.0}) {
    const double q2 = std::cos(oracle::alpha(2, h) / 2) / std::cos(oracle::alpha(0, h) / 2);
    const auto c = critical_angles_5(RobinParam::finite(h));
    EXPECT_NEAR(c.q2, q2, 1e-9);
    EXPECT_NEAR(c.theta1, std::atan(-1.0 / q2), 1e-9);
    EXPECT_GT(c.theta1, 0.0);
    EXPECT_LT(c.theta1, kPi / 4);
  }
}

TEST(Sweep5, AnglesOrderedAndCensus) {
  for (const auto h : {RobinParam::finite(20.0), RobinParam::infinity()}) {
    const auto t = sweep_angles_5(h);
    ASSERT_EQ(t.size(), 5u);
    for (std::size_t i = 1; i < t.size(); ++i) EXPECT_LT(t[i - 1], t[i]);
    EXPECT_EQ(t[3], 3 * kPi / 4);
    std::vector<int> got;
    for (const auto& e : census_sweep_5(h, t)) got.push_back(e.domains);
    EXPECT_EQ(got, (std::vector<int>{3, 2, 3, 4, 3}));
  }
  EXPECT_THROW(census_sweep_5(RobinParam::finite(5.0), {0.1}), std::domain_error);
}

TEST(Geometry25, CriticalValuesAtTwenty) {
  const auto c = critical_angles_25(20.0);
  EXPECT_NEAR(c.x_c, 0.8096522, 1e-6);
  EXPECT_NEAR(c.theta_m, 0.3324691, 1e-6);
  EXPECT_NEAR(c.theta_t, 1.2492655, 1e-6);
  EXPECT_NEAR(c.delta_theta, c.theta_m + c.theta_t - kPi / 2, 1e-15);
  // x_c solves the tangent balance of branches 1 and 5
  const double a1 = oracle::alpha(1, 20.0);
  const double a5 = oracle::alpha(5, 20.0);
  const double x = c.x_c;
  EXPECT_NEAR(a5 * std::cos(a5 * x / kPi) * std::sin(a1 * x / kPi) -
                  a1 * std::cos(a1 * x / kPi) * std::sin(a5 * x / kPi),
              0.0, 1e-10);
  EXPECT_THROW(critical_angles_25(5.0), std::domain_error);
}

TEST(Geometry25, LargeHExpansions) {
  const double h = 500.0;
  EXPECT_NEAR(critical_angles_25(h).delta_theta * h * h, 4.8, 0.24);
  EXPECT_NEAR((g_function(h) - 1.0) * h * h, 16.0, 0.8);
  double prev = INFINITY;
  for (const double hh : {100.0, 300.0, 1000.0}) {
    const double r = std::abs(solve_xc(hh) - kPi / 4 - 1.0 / (2 * hh)) * hh * hh;
    EXPECT_LT(r, 1.0);
    EXPECT_LE(r, prev);
    prev = r;
  }
}

TEST(GFunction, DecreasesTowardOneFromAbove) {
  double prev = INFINITY;
  for (double h = 20.0; h <= 500.0; h += 10.0) {
    const double g = g_function(h);
    EXPECT_GT(g, 1.0);
    EXPECT_LT(g, prev);
    prev = g;
  }
  const double a1 = oracle::alpha(1, 50.0);
  const double a5 = oracle::alpha(5, 50.0);
  EXPECT_NEAR(g_function(50.0), a5 * std::sin(a1 / 2) / (a1 * std::sin(a5 / 2)), 1e-10);
}

TEST(Wronskian, VanishesAtEndsAndNowhereInside) {
  for (const double h : {1.0, 10.0, 100.0}) {
    EXPECT_NEAR(wronskian(h, 0.0), 0.0, 1e-15);
    EXPECT_NEAR(wronskian(h, kPi / 2), 0.0, 1e-9);
    // dense sampling as an oracle for the minimum of |W|
    double lo = INFINITY;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
      const double x = 1e-3 + (kPi / 2 - 2e-3) * (i + 0.5) / n;
      lo = std::min(lo, std::abs(wronskian(h, x)));
    }
    EXPECT_GT(wronskian_min(h), 0.0);
    EXPECT_NEAR(wronskian_min(h), lo, 1e-6 * (1 + lo));
  }
  EXPECT_THROW(wronskian_min(0.0), std::domain_error);
}

TEST(Transition25, TwelveOrderedAngles) {
  const auto a = transition_angles_25(20.0);
  ASSERT_EQ(a.size(), 12u);
  EXPECT_EQ(a.front().name, "0");
  EXPECT_EQ(a[3].name, "theta_m");
  EXPECT_EQ(a[10].theta, 3 * kPi / 4);
  for (std::size_t i = 1; i < a.size(); ++i) EXPECT_LT(a[i - 1].theta, a[i].theta) << a[i].name;
}

TEST(Transition25, CensusTriplesAtTwenty) {
  const int expected[12][3] = {{12, 12, 5}, {12, 12, 3}, {8, 12, 1}, {8, 8, 1},
                               {8, 4, 1},   {8, 8, 1},   {8, 12, 1}, {12, 12, 3},
                               {12, 12, 5}, {12, 12, 5}, {16, 16, 5}, {12, 12, 5}};
  const auto angles = transition_angles_25(20.0);
  for (std::size_t i = 0; i < angles.size(); ++i) {
    const auto c = count_nodal_domains(ThetaFamily(RobinParam::finite(20.0), angles[i].theta, 5, 1));
    EXPECT_EQ(c.domains, expected[i][0]) << angles[i].name;
    EXPECT_EQ(c.boundary_zeros, expected[i][1]) << angles[i].name;
    EXPECT_EQ(c.interior_critical, expected[i][2]) << angles[i].name;
  }
}
