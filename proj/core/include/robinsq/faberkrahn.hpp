#pragma once

// First Robin eigenvalue of the unit-area disc and the Pleijel-type
// Courant-sharp exclusion tests built on it.

#include <vector>

#include "robinsq/robin_param.hpp"

namespace robinsq {

struct DiscGroundState {
  RobinParam h_tilde;
  double alpha_root = 0.0;  // first root of alpha sqrt(pi) J0'(alpha) + h J0(alpha) = 0
  double lambda1 = 0.0;     // pi alpha^2
};

DiscGroundState disc_ground_state(RobinParam h_tilde);

/// pi / j^2 with j the first zero of J0 (about 0.543229).
double pleijel_constant();
/// pi j^2, the Dirichlet ground energy of the unit-area disc.
double disc_dirichlet_energy();

/// lambda1 / h as h -> 0 computed from the secular equation's Taylor expansion:
/// -sqrt(pi) J0(0) / J0''(0) = 2 sqrt(pi).
double disc_small_h_slope();
/// lim (pi j^2 - lambda1(h)) h = 2 pi^{3/2} j^2.
double disc_large_h_defect();

/// Faber-Krahn lower bound lambda1(h sqrt(area)) / area for a domain of the given area.
double scaled_fk_bound(RobinParam h, double area);

enum class Verdict { excluded, possible };

struct PleijelCheck {
  int n = 0;
  double lambda = 0.0;
  double lhs = 0.0;  // (n - 4 sqrt(lambda)) / lambda
  double f = 0.0;    // 2/lambda - 6/sqrt(lambda) + pi/4 - pi/j^2
  Verdict verdict = Verdict::possible;
};

/// f(lambda) = 2/lambda - 6/sqrt(lambda) + pi/4 - pi/j^2.
double pleijel_function(double lambda);

/// Excluded when lambda >= 598 or when (n - 4 sqrt(lambda))/lambda >= pi/j^2.
PleijelCheck pleijel_exclusion(int n, double lambda);

/// Dirichlet indices n with lambda_n <= 50 and n / lambda_n < 0.54323.
std::vector<int> dirichlet_candidates();

}  // namespace robinsq
