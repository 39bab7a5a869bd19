#pragma once

// Integer-order Bessel functions for the radial problem of a circular well.
//
// Switchover points:
//   J0, J1, Y0, Y1   ascending series (extended precision) for x <= 20,
//                    Hankel asymptotic expansion above.
//   K0, K1           ascending series for x <= 2, trapezoidal rule on
//                    K_n(x) = int_0^inf exp(-x cosh t) cosh(n t) dt for
//                    2 < x < 25, asymptotic expansion for x >= 25.

namespace transmute::oracle {

double bessel_j0(double x);
double bessel_j1(double x);
double bessel_y0(double x);
double bessel_y1(double x);
double bessel_k0(double x);
double bessel_k1(double x);

/// exp(x) K0(x) and exp(x) K1(x); finite for any x > 0.
double bessel_k0_scaled(double x);
double bessel_k1_scaled(double x);

}  // namespace transmute::oracle
