#pragma once

// One-dimensional Robin problem on (-pi/2, pi/2):
//   -u'' = (alpha/pi)^2 u,   u'(-pi/2) = h u(-pi/2),   u'(pi/2) = -h u(pi/2).
// Branch p has alpha_p(h) in [p pi, (p+1) pi); even p gives a symmetric
// eigenfunction cos(alpha x / pi), odd p an antisymmetric sin(alpha x / pi).

#include <optional>
#include <vector>

#include "robinsq/robin_param.hpp"

namespace robinsq {

enum class Parity { even, odd };

struct AlphaSolution {
  int p = 0;
  RobinParam h;
  double alpha = 0.0;
  Parity parity = Parity::even;
};

/// Root of the split secular equation on branch p.
/// h = 0 returns p*pi and h = inf returns (p+1)*pi exactly.
AlphaSolution solve_alpha(int p, RobinParam h);

/// Residual of the smooth secular form at (p, alpha, h), divided by max(1, h pi).
/// even: alpha sin(alpha/2) - h pi cos(alpha/2)
/// odd:  alpha cos(alpha/2) + h pi sin(alpha/2)
double secular_residual(int p, double alpha, double h);

/// Normalised eigenfunction u_p(x) = cos(alpha x/pi)/sin(alpha/2) (p even) or
/// sin(alpha x/pi)/cos(alpha/2) (p odd). At h = 0 and h = inf the
/// normalisation diverges and the bare trigonometric factor is returned.
double eval_u1d(const AlphaSolution& sol, double x);

/// Bare factor cos(alpha x/pi) or sin(alpha x/pi); continuous in h on [0, inf].
double mode_factor(const AlphaSolution& sol, double x);
/// d/dx of mode_factor.
double mode_factor_dx(const AlphaSolution& sol, double x);
/// d^2/dx^2 of mode_factor.
double mode_factor_dxx(const AlphaSolution& sol, double x);

/// d alpha_p / dh from  alpha' (h pi + alpha^2/2 + h^2 pi^2/2) = pi alpha.
/// Requires 0 < h < inf.
double alpha_derivative(int p, RobinParam h);

/// h pi + alpha^2/2 + h^2 pi^2 / 2, the positive weight in the derivative ODE.
double derivative_weight(double alpha, double h);

struct AsymptoticRow {
  double h = 0.0;
  double alpha = 0.0;
  double expansion = 0.0;     // (p+1) pi - 2(p+1)/h
  double scaled_residual = 0.0;  // |alpha - expansion| * h^2
};

/// Large-h table against alpha_p(h) = (p+1) pi - 2(p+1)/h + O(1/h^2), for odd p
/// (p = 1 gives 2 pi - 4/h, p = 5 gives 6 pi - 12/h). Requires h >= 10.
std::vector<AsymptoticRow> alpha_asymptotic_check(int p, const std::vector<double>& h_list);

/// Test hook: while alive on the current thread, solve_alpha stops bisecting at
/// the given bracket width and skips the Newton polish.
class AlphaToleranceOverride {
 public:
  explicit AlphaToleranceOverride(double width);
  ~AlphaToleranceOverride();
  AlphaToleranceOverride(const AlphaToleranceOverride&) = delete;
  AlphaToleranceOverride& operator=(const AlphaToleranceOverride&) = delete;

 private:
  std::optional<double> previous_;
};

}  // namespace robinsq
