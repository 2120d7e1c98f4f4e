#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace robinsq {

class BracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RootOptions {
  double x_tolerance = 1e-14;      // absolute bracket width to stop at
  double f_tolerance = 0.0;        // |f| at or below this stops early
  int max_iterations = 400;
};

/// Plain bisection on [lo, hi]; f(lo) and f(hi) must have opposite signs (or
/// one of them be zero). Returns the midpoint of the final bracket.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              const RootOptions& opts = {});

/// Safeguarded Newton: Newton steps that leave the current bracket (or fail to
/// halve it) fall back to bisection. Same bracket contract as bisect().
double newton_bisect(const std::function<double(double)>& f,
                     const std::function<double(double)>& df, double lo,
                     double hi, const RootOptions& opts = {});

}  // namespace robinsq
