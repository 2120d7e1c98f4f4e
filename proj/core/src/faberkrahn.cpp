#include "robinsq/faberkrahn.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "robinsq/bessel.hpp"
#include "robinsq/roots.hpp"
#include "robinsq/spectrum2d.hpp"

namespace robinsq {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kQuotientBound = 0.54323;
constexpr double kPleijelCap = 598.0;

}  // namespace

double pleijel_constant() {
  const double j = bessel_j0_first_zero();
  return kPi / (j * j);
}

double disc_dirichlet_energy() {
  const double j = bessel_j0_first_zero();
  return kPi * j * j;
}

double disc_small_h_slope() {
  constexpr double j0_at_0 = 1.0;
  constexpr double j0_dd_at_0 = -0.5;
  return -std::sqrt(kPi) * j0_at_0 / j0_dd_at_0;
}

double disc_large_h_defect() {
  const double j = bessel_j0_first_zero();
  return 2.0 * std::pow(kPi, 1.5) * j * j;
}

DiscGroundState disc_ground_state(RobinParam h_tilde) {
  DiscGroundState out;
  out.h_tilde = h_tilde;
  const double j = bessel_j0_first_zero();
  if (h_tilde.is_infinite()) {
    out.alpha_root = j;
  } else if (h_tilde.is_zero()) {
    out.alpha_root = 0.0;
  } else {
    const double h = h_tilde.value();
    const double sp = std::sqrt(kPi);
    const auto f = [h, sp](double a) { return -a * sp * bessel_j1(a) + h * bessel_j0(a); };
    // f(1e-8) > 0 and f(j) < 0; tiny h needs a lower start than 1e-8.
    double lo = 1e-8;
    while (f(lo) <= 0.0 && lo > 1e-300) lo *= 1e-4;
    out.alpha_root = bisect(f, lo, j, {.x_tolerance = 1e-16 * j + 1e-300});
  }
  out.lambda1 = kPi * out.alpha_root * out.alpha_root;
  return out;
}

double scaled_fk_bound(RobinParam h, double area) {
  if (!(area > 0.0) || !std::isfinite(area)) {
    throw std::invalid_argument("scaled_fk_bound: area must be positive and finite");
  }
  const RobinParam scaled =
      h.is_infinite() ? h : RobinParam::finite(h.value() * std::sqrt(area));
  return disc_ground_state(scaled).lambda1 / area;
}

double pleijel_function(double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("pleijel_function: lambda must be > 0");
  return 2.0 / lambda - 6.0 / std::sqrt(lambda) + 0.25 * kPi - pleijel_constant();
}

PleijelCheck pleijel_exclusion(int n, double lambda) {
  if (!(lambda >= 2.0)) throw std::invalid_argument("pleijel_exclusion: lambda must be >= 2");
  PleijelCheck c;
  c.n = n;
  c.lambda = lambda;
  c.lhs = (n - 4.0 * std::sqrt(lambda)) / lambda;
  c.f = pleijel_function(lambda);
  const bool violated = !(pleijel_constant() > c.lhs);
  c.verdict = (lambda >= kPleijelCap || violated) ? Verdict::excluded : Verdict::possible;
  return c;
}

std::vector<int> dirichlet_candidates() {
  const auto table = enumerate_spectrum(RobinParam::infinity(), 51.0);
  std::vector<int> out;
  for (std::size_t i = 0; i < table.entries.size(); ++i) {
    const double lambda = table.entries[i].eigen.value;
    const int n = static_cast<int>(i) + 1;
    if (lambda <= 50.0 && n / lambda < kQuotientBound) out.push_back(n);
  }
  return out;
}

}  // namespace robinsq
