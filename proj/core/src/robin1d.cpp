#include "robinsq/robin1d.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "robinsq/roots.hpp"

namespace robinsq {

namespace {

constexpr double kPi = std::numbers::pi;

thread_local std::optional<double> g_alpha_width_override;

// Smooth secular forms; no tan() so nothing blows up at the bracket ends.
double secular(int p, double a, double h) {
  const double s = std::sin(0.5 * a);
  const double c = std::cos(0.5 * a);
  return (p % 2 == 0) ? a * s - h * kPi * c : a * c + h * kPi * s;
}

double secular_da(int p, double a, double h) {
  const double s = std::sin(0.5 * a);
  const double c = std::cos(0.5 * a);
  return (p % 2 == 0) ? s + 0.5 * a * c + 0.5 * h * kPi * s
                      : c - 0.5 * a * s + 0.5 * h * kPi * c;
}

}  // namespace

RobinParam RobinParam::parse(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "inf" || lower == "+inf" || lower == "infinity" || lower == "dirichlet") {
    return infinity();
  }
  if (lower == "neumann") return neumann();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(lower, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid Robin parameter '" + std::string(text) + "'");
  }
  if (used != lower.size() || !std::isfinite(v) || v < 0.0) {
    throw std::invalid_argument("invalid Robin parameter '" + std::string(text) + "'");
  }
  return finite(v);
}

std::string RobinParam::to_string() const {
  if (infinite_) return "inf";
  std::ostringstream out;
  out.precision(17);
  out << value_;
  return out.str();
}

AlphaSolution solve_alpha(int p, RobinParam h) {
  if (p < 0) throw std::invalid_argument("solve_alpha: branch index must be >= 0");
  AlphaSolution sol;
  sol.p = p;
  sol.h = h;
  sol.parity = (p % 2 == 0) ? Parity::even : Parity::odd;
  if (h.is_infinite()) {
    sol.alpha = (p + 1) * kPi;
    return sol;
  }
  const double hv = h.value();
  if (hv == 0.0) {
    sol.alpha = p * kPi;
    return sol;
  }
  const auto f = [p, hv](double a) { return secular(p, a, hv); };
  const auto df = [p, hv](double a) { return secular_da(p, a, hv); };
  const double lo = p * kPi;
  const double hi = (p + 1) * kPi;

  if (g_alpha_width_override) {
    sol.alpha = bisect(f, lo, hi, {.x_tolerance = *g_alpha_width_override});
    return sol;
  }

  // Coarse bisection, then Newton polish inside the narrowed bracket.
  const double mid = bisect(f, lo, hi, {.x_tolerance = 1e-6});
  const double nlo = std::max(lo, mid - 1e-6);
  const double nhi = std::min(hi, mid + 1e-6);
  double root = mid;
  const double flo = f(nlo);
  const double fhi = f(nhi);
  if ((flo <= 0.0 && fhi >= 0.0) || (flo >= 0.0 && fhi <= 0.0)) {
    root = newton_bisect(f, df, nlo, nhi,
                         {.x_tolerance = 4.0 * std::numeric_limits<double>::epsilon() *
                                         std::max(1.0, hi),
                          .max_iterations = 200});
  }
  sol.alpha = root;
  return sol;
}

double secular_residual(int p, double alpha, double h) {
  return std::abs(secular(p, alpha, h)) / std::max(1.0, h * kPi);
}

double mode_factor(const AlphaSolution& sol, double x) {
  const double k = sol.alpha / kPi;
  return sol.parity == Parity::even ? std::cos(k * x) : std::sin(k * x);
}

double mode_factor_dx(const AlphaSolution& sol, double x) {
  const double k = sol.alpha / kPi;
  return sol.parity == Parity::even ? -k * std::sin(k * x) : k * std::cos(k * x);
}

double mode_factor_dxx(const AlphaSolution& sol, double x) {
  const double k = sol.alpha / kPi;
  return -k * k * mode_factor(sol, x);
}

double eval_u1d(const AlphaSolution& sol, double x) {
  constexpr double half = 0.5 * kPi;
  if (!(std::abs(x) <= half)) {
    throw std::domain_error("eval_u1d: x outside [-pi/2, pi/2]");
  }
  const double bare = mode_factor(sol, x);
  if (sol.h.is_infinite() || sol.h.is_zero()) return bare;
  const double norm = sol.parity == Parity::even ? std::sin(0.5 * sol.alpha)
                                                 : std::cos(0.5 * sol.alpha);
  return bare / norm;
}

double derivative_weight(double alpha, double h) {
  return h * kPi + 0.5 * alpha * alpha + 0.5 * h * h * kPi * kPi;
}

double alpha_derivative(int p, RobinParam h) {
  if (!h.is_interior()) {
    throw std::domain_error("alpha_derivative: requires 0 < h < inf");
  }
  const double hv = h.value();
  const double a = solve_alpha(p, h).alpha;
  return kPi * a / derivative_weight(a, hv);
}

std::vector<AsymptoticRow> alpha_asymptotic_check(int p, const std::vector<double>& h_list) {
  std::vector<AsymptoticRow> rows;
  rows.reserve(h_list.size());
  for (const double h : h_list) {
    if (!(h >= 10.0)) throw std::domain_error("alpha_asymptotic_check: requires h >= 10");
    AsymptoticRow row;
    row.h = h;
    row.alpha = solve_alpha(p, RobinParam::finite(h)).alpha;
    row.expansion = (p + 1) * kPi - 2.0 * (p + 1) / h;
    row.scaled_residual = std::abs(row.alpha - row.expansion) * h * h;
    rows.push_back(row);
  }
  return rows;
}

AlphaToleranceOverride::AlphaToleranceOverride(double width)
    : previous_(g_alpha_width_override) {
  g_alpha_width_override = width;
}

AlphaToleranceOverride::~AlphaToleranceOverride() { g_alpha_width_override = previous_; }

}  // namespace robinsq
