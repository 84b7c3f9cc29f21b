#pragma once

// Saddle-point approximations for the Bell family, beta_n, the
// Poisson(2) moments, and the three regimes of |s(n,k)|. Factorial-scale
// quantities are returned as natural logs.

#include "bell/arb.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bell::asym {

struct ApproxValue {
  double log_value = 0.0;
  std::string error_order;  // symbolic, e.g. "O(n^-2 (log n)^2)"

  double value() const { return std::exp(log_value); }
};

struct SaddlePoint {
  double root = 0.0;
  double residual = 0.0;  // relative residual of the defining equation
  int iterations = 0;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kSaddleIterationCap = 64;
inline constexpr double kSaddleTolerance = 1e-12;

SaddlePoint solve_beta_saddle(double n);              // r (e^r - 1) = n
SaddlePoint solve_bell_saddle(double n);              // r e^r = n, i.e. W(n)
SaddlePoint solve_arima_saddle(double n, double v);   // r e^r + v r = n, 0 <= v <= 1.5
SaddlePoint solve_mw2_saddle(int n, int k);           // r (psi(n+r) - psi(r)) = k, 1 < k < n

// V = k + r^2 (psi'(n+r) - psi'(r)) at the mw2 saddle r.
double mw2_variance(int n, int k, double r);

ApproxValue beta_asym(int n);
ApproxValue beta_asym_leading(int n);  // without the 1/n correction
ApproxValue bell_asym(int n);
ApproxValue bell_asym_leading(int n);
// 2n log n - n log log n - n, the growth of log(B_n n!).
double log_bell_factorial_growth(int n);

// n-th moments of Poisson(2): T_{n+1} = 2 sum_j C(n,j) T_j.
std::vector<ArbInt> tilde_bell_exact(int N);
ApproxValue tilde_bell_asym(int n);

enum class StirlingRegime { SmallK, Central, LargeK };
const char* regime_name(StirlingRegime r);

// small-k if k <= 2 log n, large-k if n - k <= n^0.4, otherwise central.
StirlingRegime stirling_regime(int n, int k);
// Midpoint (rounded) of the k-range that dispatches to the regime, if any.
std::optional<int> regime_center(int n, StirlingRegime regime);

struct StirlingApprox {
  StirlingRegime regime = StirlingRegime::Central;
  ApproxValue approx;
  std::optional<SaddlePoint> saddle;  // central regime only
  double variance = 0.0;              // V, central regime only
};

ApproxValue stirling_small_k(int n, int k);
StirlingApprox stirling_central(int n, int k);
ApproxValue stirling_large_k(int n, int k);
StirlingApprox stirling_asym(int n, int k);

double phi(double rho);
double tau_of_rho(double rho);
double rho_of_tau(double tau);

// (W(n)/n)^l, the approximation of beta_{n-l} / beta_n.
double beta_ratio_asym(int n, int l);

}  // namespace bell::asym
