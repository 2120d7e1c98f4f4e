#pragma once

namespace robinsq {

/// Bessel J0 for x >= 0 (even extension for x < 0).
double bessel_j0(double x);
/// Bessel J1 for x >= 0 (odd extension for x < 0).
double bessel_j1(double x);
/// J0'(x) = -J1(x).
double bessel_j0_prime(double x);

/// First positive zero of J0, about 2.404825557695773.
double bessel_j0_first_zero();

}  // namespace robinsq
