#include "robinsq/nodal_angles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "robinsq/roots.hpp"

namespace robinsq {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalf = 0.5 * kPi;

double alpha(int p, double h) { return solve_alpha(p, RobinParam::finite(h)).alpha; }

void require_large(double h, const char* what) {
  if (!(h >= 10.0) || !std::isfinite(h)) throw std::domain_error(std::string(what) + ": requires h >= 10");
}

double in_open_quarter(double t, const char* what) {
  if (!(t > 0.0 && t < kHalf)) {
    throw std::domain_error(std::string(what) + ": angle left (0, pi/2)");
  }
  return t;
}

}  // namespace

CriticalAngles5 critical_angles_5(RobinParam h) {
  CriticalAngles5 out;
  if (h.is_infinite()) {
    out.q2 = -3.0;
  } else {
    if (!h.is_interior()) throw std::domain_error("critical_angles_5: requires h > 0");
    out.q2 = std::cos(0.5 * alpha(2, h.value())) / std::cos(0.5 * alpha(0, h.value()));
  }
  out.theta1 = in_open_quarter(std::atan(-1.0 / out.q2), "critical_angles_5");
  out.theta2 = kHalf - out.theta1;
  out.theta3 = 0.75 * kPi;
  return out;
}

std::vector<double> sweep_angles_5(RobinParam h) {
  const auto a = critical_angles_5(h);
  return {0.5 * a.theta1, 0.5 * (a.theta1 + a.theta2), 0.5 * (a.theta2 + a.theta3), a.theta3,
          0.5 * (a.theta3 + kPi)};
}

std::vector<SweepEntry> census_sweep_5(RobinParam h, const std::vector<double>& thetas,
                                       int resolution) {
  if (!h.is_infinite() && !(h.value() >= kLargeHFloor)) {
    throw std::domain_error("census_sweep_5: h below the large-h floor");
  }
  std::vector<SweepEntry> out;
  out.reserve(thetas.size());
  for (const double t : thetas) {
    const ThetaFamily fam(h, t, 0, 2);
    out.push_back({t, count_nodal_domains(fam, resolution).domains});
  }
  return out;
}

double solve_xc(double h) {
  require_large(h, "solve_xc");
  const double a1 = alpha(1, h);
  const double a5 = alpha(5, h);
  // cross-multiplied form, free of the cot poles
  const auto f = [a1, a5](double x) {
    return a5 * std::cos(a5 * x / kPi) * std::sin(a1 * x / kPi) -
           a1 * std::cos(a1 * x / kPi) * std::sin(a5 * x / kPi);
  };
  const double lo = kPi / 8.0;
  const double hi = 3.0 * kPi / 8.0;
  const double target = 0.25 * kPi + 0.5 / h;
  constexpr int kGrid = 1000;
  double best = NAN;
  double prev_x = lo;
  double prev_f = f(lo);
  for (int i = 1; i <= kGrid; ++i) {
    const double x = lo + (hi - lo) * i / kGrid;
    const double fx = f(x);
    if ((prev_f < 0.0) != (fx < 0.0)) {
      const double r = bisect(f, prev_x, x, {.x_tolerance = 1e-15});
      if (std::isnan(best) || std::abs(r - target) < std::abs(best - target)) best = r;
    }
    prev_x = x;
    prev_f = fx;
  }
  if (std::isnan(best)) throw BracketError("solve_xc: no sign change in (pi/8, 3pi/8)");
  return best;
}

CriticalAngles25 critical_angles_25(double h) {
  require_large(h, "critical_angles_25");
  CriticalAngles25 out;
  out.h = h;
  const double a1 = alpha(1, h);
  const double a5 = alpha(5, h);
  const double xc = solve_xc(h);
  out.x_c = xc;
  const double s1 = std::sin(a1 * xc / kPi);
  const double s5 = std::sin(a5 * xc / kPi);
  out.theta_m = in_open_quarter(
      std::atan(-s5 * std::sin(0.5 * a1) / (s1 * std::sin(0.5 * a5))), "theta_m");
  out.theta_t = in_open_quarter(std::atan(-a5 * s1 / (a1 * s5)), "theta_t");
  out.delta_theta = out.theta_m + out.theta_t - kHalf;
  return out;
}

double theta_m(double h) { return critical_angles_25(h).theta_m; }

double theta_t(double h) { return critical_angles_25(h).theta_t; }

double g_function(double h) {
  require_large(h, "g_function");
  const double a1 = alpha(1, h);
  const double a5 = alpha(5, h);
  return a5 * std::sin(0.5 * a1) / (a1 * std::sin(0.5 * a5));
}

double wronskian(double h, double x) {
  const double a0 = alpha(0, h);
  const double a2 = alpha(2, h);
  return a0 * std::sin(a0 * x / kPi) * std::cos(a2 * x / kPi) -
         a2 * std::sin(a2 * x / kPi) * std::cos(a0 * x / kPi);
}

double wronskian_min(double h, double delta, int samples) {
  if (!(h > 0.0) || !std::isfinite(h)) throw std::domain_error("wronskian_min: requires 0 < h < inf");
  if (samples < 2) throw std::invalid_argument("wronskian_min: need >= 2 samples");
  const double a0 = alpha(0, h);
  const double a2 = alpha(2, h);
  const auto w = [a0, a2](double x) {
    return std::abs(a0 * std::sin(a0 * x / kPi) * std::cos(a2 * x / kPi) -
                    a2 * std::sin(a2 * x / kPi) * std::cos(a0 * x / kPi));
  };
  const double lo = delta;
  const double hi = kHalf - delta;
  double best = INFINITY;
  for (int i = 0; i < samples; ++i) {
    const double x = lo + (hi - lo) * (i + 0.5) / samples;
    best = std::min(best, w(x));
  }
  return best;
}

std::vector<NamedAngle> transition_angles_25(double h) {
  const auto c = critical_angles_25(h);
  const double a = kHalf - c.theta_t;
  const double m = c.theta_m;
  const double b = kHalf - c.theta_m;
  const double t = c.theta_t;
  return {
      {"0", 0.0},
      {"pi/2 - theta_t", a},
      {"(pi/2 - theta_t, theta_m)", 0.5 * (a + m)},
      {"theta_m", m},
      {"pi/4", 0.25 * kPi},
      {"pi/2 - theta_m", b},
      {"(pi/2 - theta_m, theta_t)", 0.5 * (b + t)},
      {"theta_t", t},
      {"pi/2", kHalf},
      {"5pi/8", 0.625 * kPi},
      {"3pi/4", 0.75 * kPi},
      {"13pi/16", 13.0 * kPi / 16.0},
  };
}

}  // namespace robinsq
