#include "robinsq/bessel.hpp"

#include <cmath>
#include <numbers>

#include "robinsq/roots.hpp"

namespace robinsq {

namespace {

constexpr double kSeriesLimit = 16.0;

// sum_k (-1)^k (x/2)^(2k+n) / (k! (k+n)!)
double series(int n, double x) {
  const long double half = 0.5L * x;
  const long double q = -half * half;
  long double term = 1.0L;
  for (int i = 1; i <= n; ++i) term *= half / i;
  long double sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= q / (static_cast<long double>(k) * (k + n));
    sum += term;
    if (std::abs(term) < 1e-22L * std::max(1.0L, std::abs(sum))) break;
  }
  return static_cast<double>(sum);
}

// Hankel expansion; terms stop once they start to grow.
double asymptotic(int n, double x) {
  const double mu = 4.0 * n * n;
  double p = 0.0;
  double q = 0.0;
  double term = 1.0;
  double prev = INFINITY;
  for (int k = 0; k < 60; ++k) {
    if (k > 0) term *= (mu - (2.0 * k - 1) * (2.0 * k - 1)) / (k * 8.0 * x);
    if (std::abs(term) > prev) break;
    prev = std::abs(term);
    const int r = k % 4;
    if (r == 0) p += term;
    if (r == 1) q += term;
    if (r == 2) p -= term;
    if (r == 3) q -= term;
  }
  const double w = x - (0.5 * n + 0.25) * std::numbers::pi;
  return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * std::cos(w) - q * std::sin(w));
}

double jn(int n, double x) {
  return x <= kSeriesLimit ? series(n, x) : asymptotic(n, x);
}

}  // namespace

double bessel_j0(double x) { return jn(0, std::abs(x)); }

double bessel_j1(double x) { return x < 0.0 ? -jn(1, -x) : jn(1, x); }

double bessel_j0_prime(double x) { return -bessel_j1(x); }

double bessel_j0_first_zero() {
  static const double j = newton_bisect(bessel_j0, bessel_j0_prime, 2.0, 3.0,
                                        {.x_tolerance = 1e-15});
  return j;
}

}  // namespace robinsq
