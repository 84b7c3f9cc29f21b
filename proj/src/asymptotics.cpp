#include "bell/asymptotics.hpp"

#include "bell/special.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

namespace bell::asym {

namespace {

constexpr double kLog2Pi = 1.8378770664093454836;

void require_n(int n, int lo, const char* fn) {
  if (n < lo) throw std::domain_error(std::string(fn) + ": n must be >= " + std::to_string(lo));
}

// Newton on a monotone increasing g(u), falling back to bisection whenever a
// step leaves the current bracket. g returns the relative residual.
SaddlePoint safeguarded_newton(const std::function<std::pair<double, double>(double)>& g, double lo, double hi,
                               double u, const char* what) {
  if (!(u > lo && u < hi)) u = 0.5 * (lo + hi);
  for (int it = 1; it <= kSaddleIterationCap; ++it) {
    const auto [val, slope] = g(u);
    if (!std::isfinite(val)) throw ConvergenceError(std::string(what) + ": non-finite residual");
    if (std::fabs(val) <= kSaddleTolerance) return {std::exp(u), std::fabs(val), it};
    if (val < 0) lo = u; else hi = u;
    double next = u - val / slope;
    if (!(slope > 0) || !(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == u) return {std::exp(u), std::fabs(val), it};
    u = next;
  }
  throw ConvergenceError(std::string(what) + ": no convergence within " + std::to_string(kSaddleIterationCap) +
                         " iterations");
}

double upper_log_root(double n) { return std::log(std::log1p(n) + 2.0) + 1.0; }

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

}  // namespace

SaddlePoint solve_beta_saddle(double n) {
  if (!(n >= 1.0) || !std::isfinite(n)) throw std::domain_error("solve_beta_saddle: n must be >= 1");
  const double ln = std::log(n);
  auto g = [ln](double u) {
    const double r = std::exp(u);
    // log(r (e^r - 1)) without overflow
    const double val = u + r + std::log(-std::expm1(-r)) - ln;
    const double slope = 1.0 + r / (-std::expm1(-r));
    return std::pair{val, slope};
  };
  return safeguarded_newton(g, -50.0, upper_log_root(n), std::log(special::lambert_w(n)), "solve_beta_saddle");
}

SaddlePoint solve_bell_saddle(double n) {
  if (!(n >= 1.0) || !std::isfinite(n)) throw std::domain_error("solve_bell_saddle: n must be >= 1");
  const double ln = std::log(n);
  auto g = [ln](double u) {
    const double r = std::exp(u);
    return std::pair{u + r - ln, 1.0 + r};
  };
  return safeguarded_newton(g, -50.0, upper_log_root(n), std::log(special::lambert_w(n)), "solve_bell_saddle");
}

SaddlePoint solve_arima_saddle(double n, double v) {
  if (!(n >= 1.0) || !std::isfinite(n)) throw std::domain_error("solve_arima_saddle: n must be >= 1");
  if (!(v >= 0.0 && v <= 1.5)) throw std::domain_error("solve_arima_saddle: v must lie in [0, 1.5]");
  const double ln = std::log(n);
  auto g = [ln, v](double u) {
    const double r = std::exp(u);
    const double t = v * std::exp(-r);
    return std::pair{u + r + std::log1p(t) - ln, 1.0 + r / (1.0 + t)};
  };
  return safeguarded_newton(g, -50.0, upper_log_root(n), std::log(special::lambert_w(n)), "solve_arima_saddle");
}

SaddlePoint solve_mw2_saddle(int n, int k) {
  if (n < 3 || k <= 1 || k >= n) throw std::domain_error("solve_mw2_saddle: need 1 < k < n");
  // psi(n+r) - psi(r) = sum_{0<=i<n} 1/(r+i), evaluated directly.
  auto g = [n, k](double u) {
    const double r = std::exp(u);
    double f = 0.0;
    double df = 0.0;
    for (int i = n - 1; i >= 0; --i) {
      const double q = r / (r + i);
      f += q;
      df += q * (1.0 - q);
    }
    return std::pair{(f - k) / k, df / k};
  };
  const double guess = n * rho_of_tau(static_cast<double>(k) / n);
  return safeguarded_newton(g, -60.0, 60.0, std::log(guess), "solve_mw2_saddle");
}

double mw2_variance(int n, int k, double r) {
  double acc = 0.0;
  for (int i = n - 1; i >= 0; --i) acc += 1.0 / ((r + i) * (r + i));
  return k - r * r * acc;
}

ApproxValue beta_asym_leading(int n) {
  require_n(n, 2, "beta_asym");
  const double w = special::lambert_w(n);
  return {(w + 1.0 / w - 1.0) * n - w - 1.0 - 0.5 * std::log(w + 1.0), "O(n^-1 log n)"};
}

ApproxValue beta_asym(int n) {
  ApproxValue a = beta_asym_leading(n);
  const double w = special::lambert_w(n);
  const double c = (26 * w * w * w * w + 67 * w * w * w + 46 * w * w) / (24.0 * n * std::pow(w + 1.0, 3));
  a.log_value += std::log1p(-c);
  a.error_order = "O(n^-2 (log n)^2)";
  return a;
}

ApproxValue bell_asym_leading(int n) {
  require_n(n, 2, "bell_asym");
  const double w = special::lambert_w(n);
  return {(w + 1.0 / w - 1.0) * n - 1.0 - 0.5 * std::log(w + 1.0), "O(n^-1 log n)"};
}

ApproxValue bell_asym(int n) {
  ApproxValue a = bell_asym_leading(n);
  const double w = special::lambert_w(n);
  const double c = w * w * (2 * w * w + 7 * w + 10) / (24.0 * n * std::pow(w + 1.0, 3));
  a.log_value += std::log1p(-c);
  a.error_order = "O(n^-2 (log n)^2)";
  return a;
}

double log_bell_factorial_growth(int n) {
  require_n(n, 2, "log_bell_factorial_growth");
  const double ln = std::log(static_cast<double>(n));
  return 2.0 * n * ln - n * std::log(ln) - n;
}

std::vector<ArbInt> tilde_bell_exact(int N) {
  if (N < 0) throw std::domain_error("tilde_bell_exact: N must be >= 0");
  std::vector<ArbInt> t{ArbInt(1)};
  t.reserve(static_cast<std::size_t>(N) + 1);
  for (int m = 0; m < N; ++m) {
    ArbInt acc = 0;
    ArbInt c = 1;  // C(m, j)
    for (int j = 0; j <= m; ++j) {
      acc += c * t[static_cast<std::size_t>(j)];
      c = c * (m - j) / (j + 1);
    }
    t.push_back(2 * acc);
  }
  return t;
}

ApproxValue tilde_bell_asym(int n) {
  require_n(n, 2, "tilde_bell_asym");
  const double w = special::lambert_w(0.5 * n);
  const double c = w * w * (2 * w * w + 7 * w + 10) / (24.0 * n * std::pow(w + 1.0, 3));
  const double lv = (w - 1.0 + std::numbers::ln2 + 1.0 / w) * n - 2.0 - 0.5 * std::log(w + 1.0) + std::log1p(-c);
  return {lv, "O(n^-2 (log n)^2)"};
}

const char* regime_name(StirlingRegime r) {
  switch (r) {
    case StirlingRegime::SmallK: return "small-k";
    case StirlingRegime::Central: return "central";
    case StirlingRegime::LargeK: return "large-k";
  }
  return "?";
}

StirlingRegime stirling_regime(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw std::domain_error("stirling_regime: need 1 <= k <= n");
  if (k <= 2.0 * std::log(static_cast<double>(n))) return StirlingRegime::SmallK;
  if (n - k <= std::pow(static_cast<double>(n), 0.4)) return StirlingRegime::LargeK;
  return StirlingRegime::Central;
}

std::optional<int> regime_center(int n, StirlingRegime regime) {
  int lo = 0;
  int hi = -1;
  for (int k = 1; k <= n; ++k) {
    if (stirling_regime(n, k) != regime) continue;
    if (lo == 0) lo = k;
    hi = k;
  }
  if (lo == 0) return std::nullopt;
  return static_cast<int>(std::lround(0.5 * (lo + hi)));
}

ApproxValue stirling_small_k(int n, int k) {
  if (n < 2 || k < 1 || k > n) throw std::domain_error("stirling_small_k: need n >= 2, 1 <= k <= n");
  const double ln = std::log(static_cast<double>(n));
  const double lv = log_factorial(n) + (k - 1) * std::log(ln) - ln - std::lgamma(1.0 + (k - 1) / ln) -
                    log_factorial(k - 1);
  return {lv, "O(k (log n)^-2)"};
}

StirlingApprox stirling_central(int n, int k) {
  const SaddlePoint sp = solve_mw2_saddle(n, k);
  const double r = sp.root;
  const double v = mw2_variance(n, k, r);
  if (!(v > 0)) throw ConvergenceError("stirling_central: non-positive variance at the saddle");
  double lg = 0.0;  // log Gamma(n+r) - log Gamma(r)
  for (int i = 0; i < n; ++i) lg += std::log(r + i);
  StirlingApprox out;
  out.regime = StirlingRegime::Central;
  out.approx = {-k * std::log(r) + lg - 0.5 * (kLog2Pi + std::log(v)), "O(V^-1)"};
  out.saddle = sp;
  out.variance = v;
  return out;
}

ApproxValue stirling_large_k(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw std::domain_error("stirling_large_k: need 1 <= k <= n");
  const int l = n - k;
  const double lv = 2.0 * l * std::log(static_cast<double>(n)) - log_factorial(l) - l * std::numbers::ln2;
  return {lv, "O((l+1)^2 n^-1)"};
}

StirlingApprox stirling_asym(int n, int k) {
  const StirlingRegime regime = stirling_regime(n, k);
  if (regime == StirlingRegime::Central) return stirling_central(n, k);
  StirlingApprox out;
  out.regime = regime;
  out.approx = regime == StirlingRegime::SmallK ? stirling_small_k(n, k) : stirling_large_k(n, k);
  return out;
}

double phi(double rho) {
  if (!(rho > 0) || !std::isfinite(rho)) throw std::domain_error("phi: rho must be > 0");
  return rho * (1.0 - std::log(rho)) * std::log1p(1.0 / rho) + std::log1p(rho) - 1.0;
}

double tau_of_rho(double rho) {
  if (!(rho > 0) || !std::isfinite(rho)) throw std::domain_error("tau_of_rho: rho must be > 0");
  return rho * std::log1p(1.0 / rho);
}

double rho_of_tau(double tau) {
  if (!(tau > 0.0 && tau < 1.0)) throw std::domain_error("rho_of_tau: tau must lie in (0, 1)");
  double lo = -60.0;
  double hi = 60.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (tau_of_rho(std::exp(mid)) < tau) lo = mid; else hi = mid;
  }
  return std::exp(0.5 * (lo + hi));
}

double beta_ratio_asym(int n, int l) {
  if (l < 0 || n <= l) throw std::domain_error("beta_ratio_asym: need n > l >= 0");
  if (l == 0) return 1.0;
  return std::pow(special::lambert_w(n) / n, l);
}

}  // namespace bell::asym
