#include <cmath>
#include <numbers>

#include "robinsq/nodal.hpp"

namespace robinsq {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalf = 0.5 * kPi;

}  // namespace

ThetaFamily::ThetaFamily(RobinParam h, double theta, int p, int q)
    : h_(h), fp_(solve_alpha(p, h)), fq_(solve_alpha(q, h)) {
  if (!std::isfinite(theta)) throw std::invalid_argument("ThetaFamily: theta must be finite");
  const double turns = std::floor(theta / kPi);
  theta_ = theta - turns * kPi;
  if (theta_ >= kPi) theta_ -= kPi;
  if (theta_ < 0.0) theta_ = 0.0;
  sign_ = (static_cast<long long>(turns) % 2 == 0) ? 1.0 : -1.0;
  c_ = std::cos(theta_);
  s_ = std::sin(theta_);
}

double ThetaFamily::value(double x, double y) const {
  const double a = mode_factor(fp_, x) * mode_factor(fq_, y);
  const double b = mode_factor(fq_, x) * mode_factor(fp_, y);
  return sign_ * (c_ * a + s_ * b);
}

double ThetaFamily::operator()(double x, double y) const {
  if (!(std::abs(x) <= kHalf && std::abs(y) <= kHalf)) {
    throw std::domain_error("eval_phi: point outside the closed square");
  }
  return value(x, y);
}

std::array<double, 2> ThetaFamily::gradient(double x, double y) const {
  const double px = mode_factor(fp_, x), qx = mode_factor(fq_, x);
  const double py = mode_factor(fp_, y), qy = mode_factor(fq_, y);
  const double dpx = mode_factor_dx(fp_, x), dqx = mode_factor_dx(fq_, x);
  const double dpy = mode_factor_dx(fp_, y), dqy = mode_factor_dx(fq_, y);
  return {sign_ * (c_ * dpx * qy + s_ * dqx * py), sign_ * (c_ * px * dqy + s_ * qx * dpy)};
}

std::array<double, 3> ThetaFamily::hessian(double x, double y) const {
  const double px = mode_factor(fp_, x), qx = mode_factor(fq_, x);
  const double py = mode_factor(fp_, y), qy = mode_factor(fq_, y);
  const double dpx = mode_factor_dx(fp_, x), dqx = mode_factor_dx(fq_, x);
  const double dpy = mode_factor_dx(fp_, y), dqy = mode_factor_dx(fq_, y);
  const double ddpx = mode_factor_dxx(fp_, x), ddqx = mode_factor_dxx(fq_, x);
  const double ddpy = mode_factor_dxx(fp_, y), ddqy = mode_factor_dxx(fq_, y);
  return {sign_ * (c_ * ddpx * qy + s_ * ddqx * py), sign_ * (c_ * dpx * dqy + s_ * dqx * dpy),
          sign_ * (c_ * px * ddqy + s_ * qx * ddpy)};
}

double ThetaFamily::lambda() const {
  return (fp_.alpha * fp_.alpha + fq_.alpha * fq_.alpha) / (kPi * kPi);
}

double eval_phi(const ThetaFamily& family, double x, double y) { return family(x, y); }

const char* side_name(Side side) {
  switch (side) {
    case Side::left: return "left";
    case Side::right: return "right";
    case Side::bottom: return "bottom";
    case Side::top: return "top";
  }
  return "?";
}

}  // namespace robinsq
