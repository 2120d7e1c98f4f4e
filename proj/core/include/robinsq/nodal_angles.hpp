#pragma once

// Critical angles of the (0,2) and (5,1) families and the one-dimensional
// quantities behind them.

#include <string>
#include <vector>

#include "robinsq/nodal.hpp"

namespace robinsq {

struct CriticalAngles5 {
  double q2 = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;  // pi/2 - theta1
  double theta3 = 0.0;  // 3 pi / 4
};

/// q2 = cos(alpha_2/2) / cos(alpha_0/2), theta1 = arctan(-1/q2). h = inf gives
/// q2 = -3 exactly. Requires h > 0.
CriticalAngles5 critical_angles_5(RobinParam h);

inline constexpr double kLargeHFloor = 20.0;

/// One theta strictly inside each of the five ranges, with theta3 itself in
/// the fourth slot.
std::vector<double> sweep_angles_5(RobinParam h);

struct SweepEntry {
  double theta = 0.0;
  int domains = 0;
};

/// Census of the (0,2) family at each theta. Requires h >= kLargeHFloor.
std::vector<SweepEntry> census_sweep_5(RobinParam h, const std::vector<double>& thetas,
                                       int resolution = kDefaultResolution);

/// Root of alpha_5 cot(alpha_5 x/pi) = alpha_1 cot(alpha_1 x/pi) in
/// (pi/8, 3 pi/8) nearest pi/4 + 1/(2h). Requires h >= 10.
double solve_xc(double h);

struct CriticalAngles25 {
  double h = 0.0;
  double x_c = 0.0;
  double theta_m = 0.0;
  double theta_t = 0.0;
  double delta_theta = 0.0;  // theta_m + theta_t - pi/2
};

CriticalAngles25 critical_angles_25(double h);
double theta_m(double h);
double theta_t(double h);

/// g(h) = alpha_5 sin(alpha_1/2) / (alpha_1 sin(alpha_5/2)). Requires h >= 10.
double g_function(double h);

/// W(x) = alpha_0 sin(alpha_0 x/pi) cos(alpha_2 x/pi) - alpha_2 sin(alpha_2 x/pi) cos(alpha_0 x/pi)
double wronskian(double h, double x);
/// min |W| over (delta, pi/2 - delta). Requires 0 < h < inf.
double wronskian_min(double h, double delta = 1e-3, int samples = 100000);

struct NamedAngle {
  std::string name;
  double theta = 0.0;
};

/// The twelve angles of the (5,1) transition list at h: the critical angles
/// and one point inside each open range between them.
std::vector<NamedAngle> transition_angles_25(double h);

}  // namespace robinsq
