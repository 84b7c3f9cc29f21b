#pragma once

#include "bell/arb.hpp"

namespace bell::special {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// Principal branch W(x) for x > 0 (We^W = x), Halley iteration.
double lambert_w(double x);

// First-order expansion W(n - t) ~ W(n) - W(n) t / (n (W(n) + 1)).
double lambert_w_shift(double n, double t);

double log_gamma(double x);  // x > 0
double digamma(double x);    // x > 0
double trigamma(double x);   // x > 0

// H_n^{[m]} = sum_{1<=j<=n} j^{-m}; exact form limited to n <= 10^4.
ArbRat harmonic_exact(int n, int m = 1);
double harmonic(long n, int m = 1);

}  // namespace bell::special
