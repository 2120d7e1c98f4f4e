#include "robinsq/roots.hpp"

#include <cmath>
#include <sstream>

namespace robinsq {

namespace {

void require_bracket(double flo, double fhi, double lo, double hi) {
  if (std::isnan(flo) || std::isnan(fhi) || (flo > 0.0 && fhi > 0.0) ||
      (flo < 0.0 && fhi < 0.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "no sign change on [" << lo << ", " << hi << "]: f = " << flo
        << ", " << fhi;
    throw BracketError(msg.str());
  }
}

}  // namespace

double bisect(const std::function<double(double)>& f, double lo, double hi,
              const RootOptions& opts) {
  double flo = f(lo);
  const double fhi = f(hi);
  require_bracket(flo, fhi, lo, hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  for (int it = 0; it < opts.max_iterations && std::abs(hi - lo) > opts.x_tolerance; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= std::min(lo, hi) || mid >= std::max(lo, hi)) break;
    const double fm = f(mid);
    if (fm == 0.0 || std::abs(fm) <= opts.f_tolerance) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double newton_bisect(const std::function<double(double)>& f,
                     const std::function<double(double)>& df, double lo,
                     double hi, const RootOptions& opts) {
  double flo = f(lo);
  double fhi = f(hi);
  require_bracket(flo, fhi, lo, hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  // Orient so that f(lo) < 0.
  if (flo > 0.0) {
    std::swap(lo, hi);
    std::swap(flo, fhi);
  }
  double x = 0.5 * (lo + hi);
  double dx_old = std::abs(hi - lo);
  double dx = dx_old;
  double fx = f(x);
  double dfx = df(x);
  for (int it = 0; it < opts.max_iterations; ++it) {
    const bool newton_leaves = ((x - hi) * dfx - fx) * ((x - lo) * dfx - fx) >= 0.0;
    const bool too_slow = std::abs(2.0 * fx) > std::abs(dx_old * dfx);
    if (newton_leaves || too_slow || dfx == 0.0) {
      dx_old = dx;
      dx = 0.5 * (hi - lo);
      x = lo + dx;
    } else {
      dx_old = dx;
      dx = fx / dfx;
      x -= dx;
    }
    if (std::abs(dx) <= opts.x_tolerance) break;
    fx = f(x);
    if (fx == 0.0 || std::abs(fx) <= opts.f_tolerance) break;
    dfx = df(x);
    if (fx < 0.0) {
      lo = x;
    } else {
      hi = x;
    }
    if (std::abs(hi - lo) <= opts.x_tolerance) break;
  }
  return x;
}

}  // namespace robinsq
