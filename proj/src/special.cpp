#include "bell/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace bell::special {

namespace {

void require_positive(double x, const char* fn) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error(std::string(fn) + ": argument must be finite and > 0");
  }
}

constexpr int kMaxIterations = 64;

// Sum of j^{-m} for lo <= j < hi by binary splitting.
ArbRat harmonic_range(long lo, long hi, int m) {
  if (hi - lo == 1) {
    ArbInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(lo), static_cast<unsigned long>(m));
    return make_rat(ArbInt(1), den);
  }
  const long mid = lo + (hi - lo) / 2;
  return harmonic_range(lo, mid, m) + harmonic_range(mid, hi, m);
}

}  // namespace

double lambert_w(double x) {
  require_positive(x, "lambert_w");
  const double eps = std::numeric_limits<double>::epsilon();
  if (x > 1e100) {
    // Newton on w + log w = log x; e^w would overflow the product form.
    const double lx = std::log(x);
    double w = lx - std::log(lx);
    for (int i = 0; i < kMaxIterations; ++i) {
      const double step = (w + std::log(w) - lx) / (1.0 + 1.0 / w);
      w -= step;
      if (std::fabs(step) <= 4 * eps * w) break;
    }
    return w;
  }
  const double l1 = std::log1p(x);
  double w = l1 * (1.0 - std::log1p(l1) / (2.0 + l1));
  for (int i = 0; i < kMaxIterations; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= step;
    if (std::fabs(step) <= 4 * eps * std::fabs(w)) break;
  }
  return w;
}

double lambert_w_shift(double n, double t) {
  if (!(n > 0.0) || !(n - t > 0.0)) throw std::domain_error("lambert_w_shift: need n > 0 and n - t > 0");
  const double w = lambert_w(n);
  return w - w * t / (n * (w + 1.0));
}

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  return std::lgamma(x);
}

double digamma(double x) {
  require_positive(x, "digamma");
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double r = 1.0 / (x * x);
  const double series =
      r * (1.0 / 12 - r * (1.0 / 120 - r * (1.0 / 252 - r * (1.0 / 240 - r * (1.0 / 132 - r * (691.0 / 32760 - r / 12))))));
  return acc + std::log(x) - 0.5 / x - series;
}

double trigamma(double x) {
  require_positive(x, "trigamma");
  double acc = 0.0;
  while (x < 10.0) {
    acc += 1.0 / (x * x);
    x += 1.0;
  }
  const double ix = 1.0 / x;
  const double r = ix * ix;
  const double series =
      ix * (1.0 + ix / 2 + r * (1.0 / 6 - r * (1.0 / 30 - r * (1.0 / 42 - r * (1.0 / 30 - r * (5.0 / 66 - r * (691.0 / 2730 - r * 7.0 / 6)))))));
  return acc + series;
}

ArbRat harmonic_exact(int n, int m) {
  if (n < 0 || n > 10000) throw std::domain_error("harmonic_exact: n must lie in 0..10000");
  if (m < 1) throw std::domain_error("harmonic_exact: order m must be >= 1");
  if (n == 0) return ArbRat(0);
  return harmonic_range(1, n + 1, m);
}

double harmonic(long n, int m) {
  if (n < 0) throw std::domain_error("harmonic: n must be >= 0");
  if (m < 1) throw std::domain_error("harmonic: order m must be >= 1");
  constexpr long kDirect = 1000000;
  const long direct = n < kDirect ? n : kDirect;
  double sum = 0.0;
  for (long j = direct; j >= 1; --j) sum += std::pow(static_cast<double>(j), -m);
  if (n == direct) return sum;
  // Euler-Maclaurin for sum_{direct < j <= n} j^{-m}.
  const double a = static_cast<double>(direct);
  const double b = static_cast<double>(n);
  const double integral = (m == 1) ? std::log(b / a) : (std::pow(a, 1.0 - m) - std::pow(b, 1.0 - m)) / (m - 1);
  const double ends = 0.5 * (std::pow(b, -m) - std::pow(a, -m));
  const double deriv = m / 12.0 * (std::pow(a, -m - 1.0) - std::pow(b, -m - 1.0));
  return sum + integral + ends + deriv;
}

}  // namespace bell::special
