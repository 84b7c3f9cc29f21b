#include "bell/distributions.hpp"

#include "bell/asymptotics.hpp"
#include "bell/exact.hpp"
#include "bell/special.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace bell::dist {

namespace {

void require_n(int n, int lo, const char* fn) {
  if (n < lo) throw std::domain_error(std::string(fn) + ": n must be >= " + std::to_string(lo));
}

ArbInt abs_of(const ArbInt& x) { return x < 0 ? ArbInt(-x) : x; }

ArbInt power(long base, int e) {
  ArbInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return out;
}

// H_0..H_m and H^{[2]}_0..H^{[2]}_m as exact rationals.
std::pair<std::vector<ArbRat>, std::vector<ArbRat>> harmonic_tables(int m) {
  std::vector<ArbRat> h1{ArbRat(0)};
  std::vector<ArbRat> h2{ArbRat(0)};
  for (int j = 1; j <= m; ++j) {
    h1.push_back(h1.back() + ArbRat(1, j));
    h2.push_back(h2.back() + ArbRat(1, static_cast<unsigned long>(j) * static_cast<unsigned long>(j)));
  }
  return {std::move(h1), std::move(h2)};
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

// B^{(a)}_0..B^{(a)}_N from B_{m+1} = a sum_i C(m,i) B_i (EGF e^{a(e^z-1)}).
std::vector<ArbInt> scaled_bell(int N, int a) {
  std::vector<ArbInt> t{ArbInt(1)};
  for (int m = 0; m < N; ++m) {
    ArbInt acc = 0;
    for (int i = 0; i <= m; ++i) acc += binomial(static_cast<unsigned>(m), static_cast<unsigned>(i)) * t[static_cast<std::size_t>(i)];
    t.push_back(a * acc);
  }
  return t;
}

double normal_density(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi); }

}  // namespace

DiscretePMF::DiscretePMF(int k_min, std::vector<ArbInt> weights, std::string name)
    : k_min_(k_min), weights_(std::move(weights)), total_(0), name_(std::move(name)) {
  if (weights_.empty()) throw std::invalid_argument("pmf " + name_ + ": empty weight list");
  for (const auto& w : weights_) {
    if (w < 0) throw std::invalid_argument("pmf " + name_ + ": negative weight");
    total_ += w;
  }
  if (total_ == 0) throw std::invalid_argument("pmf " + name_ + ": all weights are zero");
}

const ArbInt& DiscretePMF::weight(int k) const {
  if (k < k_min_ || k > k_max()) throw std::out_of_range("pmf " + name_ + ": k outside support");
  return weights_[static_cast<std::size_t>(k - k_min_)];
}

ArbRat DiscretePMF::probability(int k) const { return make_rat(weight(k), total_); }

double DiscretePMF::probability_double(int k) const { return to_double(probability(k)); }

DiscretePMF pmf_from_weights(int k_min, std::vector<ArbInt> weights, std::string name) {
  return DiscretePMF(k_min, std::move(weights), std::move(name));
}

Moments moments_exact(const DiscretePMF& pmf) {
  ArbInt s1 = 0;
  ArbInt s2 = 0;
  int k = pmf.k_min();
  for (const auto& w : pmf.weights()) {
    s1 += k * w;
    s2 += ArbInt(k) * k * w;
    ++k;
  }
  const ArbRat mean = make_rat(s1, pmf.total());
  return {mean, make_rat(s2, pmf.total()) - mean * mean};
}

DiscretePMF matsunaga_pmf(int n) {
  require_n(n, 1, "matsunaga_pmf");
  const auto m = exact::matsunaga_rows(n);
  std::vector<ArbInt> w;
  for (const auto& x : m.row(n)) w.push_back(abs_of(x));
  return DiscretePMF(1, std::move(w), "matsunaga");
}

Moments matsunaga_moments_closed(int n) {
  require_n(n, 4, "matsunaga_moments_closed");
  const auto beta = exact::beta_numbers(n);
  const auto [h1, h2] = harmonic_tables(n);
  ArbRat s0 = 0, s1 = 0, s2 = 0;
  for (int j = 0; j <= n - 2; ++j) {
    const int m = n - j;
    const ArbInt c = (j % 2 == 0 ? 1 : -1) * beta[static_cast<std::size_t>(m)];
    const auto& h = h1[static_cast<std::size_t>(m)];
    s0 += c;
    s1 += c * h;
    s2 += c * (h * h - h2[static_cast<std::size_t>(m)]);
  }
  const ArbRat mean = s1 / s0;
  return {mean, s2 / s0 + mean - mean * mean};
}

DiscretePMF weighted_matsunaga_pmf(int n) {
  require_n(n, 4, "weighted_matsunaga_pmf");
  const auto m = exact::weighted_matsunaga_rows(n);
  std::vector<ArbInt> w;
  for (const auto& x : m.row(n)) w.push_back(abs_of(x));
  return DiscretePMF(1, std::move(w), "weighted-matsunaga");
}

Moments weighted_matsunaga_moments_closed(int n) {
  require_n(n, 4, "weighted_matsunaga_moments_closed");
  const auto beta = exact::beta_numbers(n);
  const auto [h1, h2] = harmonic_tables(2 * n);
  ArbRat s0 = 0, s1 = 0, s2 = 0;
  for (int j = 0; j <= n - 2; ++j) {
    const auto top = static_cast<std::size_t>(2 * n - j - 1);
    const ArbInt c = binomial(static_cast<unsigned>(top), static_cast<unsigned>(n - j)) * (j % 2 == 0 ? 1 : -1) *
                     beta[static_cast<std::size_t>(n - j)];
    const ArbRat a = h1[top] - h1[static_cast<std::size_t>(n - 1)];
    const ArbRat b = h2[top] - h2[static_cast<std::size_t>(n - 1)];
    s0 += c;
    s1 += c * a;
    s2 += c * (a * a - b);
  }
  const ArbRat mean = n * s1 / s0;
  const ArbRat fact2 = ArbRat(n) * n * s2 / s0;
  return {mean, fact2 + mean - mean * mean};
}

double weighted_refined_gaussian(int n, int k) {
  require_n(n, 4, "weighted_refined_gaussian");
  const double s2 = kWeightedSigma2;
  const double s = std::sqrt(s2);
  const double rn = std::sqrt(static_cast<double>(n));
  const double x = (k - kWeightedMu * n) / (s * rn);
  const double main = std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi * s2 * n);
  const double corr = x * ((4 * s2 - 1) * x * x - 3 * (2 * s2 - 1)) / (24 * s2 * s * rn);
  return main * (1.0 + corr);
}

DiscretePMF arima_pmf(int n) {
  require_n(n, 1, "arima_pmf");
  const auto a = exact::arima_rows(n);
  const auto r = a.row(n);
  return DiscretePMF(0, std::vector<ArbInt>(r.begin(), r.end()), "arima");
}

DiscretePMF arima_reversed_pmf(int n) {
  require_n(n, 1, "arima_reversed_pmf");
  const auto a = exact::arima_rows(n);
  const auto r = a.row(n);
  return DiscretePMF(0, std::vector<ArbInt>(r.rbegin(), r.rend()), "arima-reversed");
}

Moments arima_moments_closed(int n) {
  require_n(n, 1, "arima_moments_closed");
  const auto b = exact::bell_numbers(n + 1);
  const auto& bn1 = b[static_cast<std::size_t>(n + 1)];
  const ArbRat mean = make_rat(n * b[static_cast<std::size_t>(n)], bn1);
  const ArbRat second =
      make_rat(ArbInt(n) * (n - 1) * b[static_cast<std::size_t>(n - 1)] + n * b[static_cast<std::size_t>(n)], bn1);
  return {mean, second - mean * mean};
}

double poisson_tv_distance(const DiscretePMF& pmf, double lambda) {
  if (!(lambda > 0)) throw std::domain_error("poisson_tv_distance: lambda must be > 0");
  if (pmf.k_min() < 0) throw std::domain_error("poisson_tv_distance: support must be nonnegative");
  double diff = 0.0;
  double covered = 0.0;
  for (int k = 0; k <= pmf.k_max(); ++k) {
    const double q = std::exp(k * std::log(lambda) - lambda - std::lgamma(k + 1.0));
    const double p = k < pmf.k_min() ? 0.0 : pmf.probability_double(k);
    diff += std::fabs(p - q);
    covered += q;
  }
  return 0.5 * (diff + std::max(0.0, 1.0 - covered));
}

DiscretePMF a033306_pmf(int n) {
  require_n(n, 1, "a033306_pmf");
  const auto b = exact::bell_numbers(n);
  std::vector<ArbInt> w;
  for (int k = 0; k <= n; ++k) {
    w.push_back(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) * b[static_cast<std::size_t>(k)] *
                b[static_cast<std::size_t>(n - k)]);
  }
  return DiscretePMF(0, std::move(w), "a033306");
}

Moments a033306_moments_closed(int n) {
  require_n(n, 1, "a033306_moments_closed");
  const auto t = asym::tilde_bell_exact(n);
  const ArbRat var = make_rat(n, 4) + make_rat(ArbInt(n) * (n - 1) * t[static_cast<std::size_t>(n - 1)],
                                             4 * t[static_cast<std::size_t>(n)]);
  return {make_rat(n, 2), var};
}

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::A056856: return "A056856";
    case Variant::A220883: return "A220883";
    case Variant::A260887: return "A260887";
    case Variant::A220884: return "A220884";
    case Variant::A078937: return "A078937";
    case Variant::A078938: return "A078938";
    case Variant::A078939: return "A078939";
    case Variant::A124323: return "A124323";
    case Variant::A086659: return "A086659";
  }
  return "?";
}

std::vector<Variant> all_variants() {
  return {Variant::A056856, Variant::A220883, Variant::A260887, Variant::A220884, Variant::A078937,
          Variant::A078938, Variant::A078939, Variant::A124323, Variant::A086659};
}

Variant parse_variant(const std::string& tag) {
  const std::string t = lower(tag);
  for (Variant v : all_variants()) {
    if (lower(variant_name(v)) == t) return v;
  }
  throw std::invalid_argument("unknown variant triangle: " + tag);
}

std::vector<ArbInt> expand_linear_product(const std::vector<std::pair<ArbInt, ArbInt>>& factors) {
  std::vector<ArbInt> poly{ArbInt(1)};
  for (const auto& [a, b] : factors) {
    std::vector<ArbInt> next(poly.size() + 1, ArbInt(0));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += a * poly[i];
      next[i + 1] += b * poly[i];
    }
    poly = std::move(next);
  }
  return poly;
}

DiscretePMF variant_triangle(int n, Variant v) {
  require_n(n, 2, "variant_triangle");
  const std::string name = variant_name(v);
  std::vector<std::pair<ArbInt, ArbInt>> factors;
  switch (v) {
    case Variant::A056856: {
      const auto s = exact::stirling_signed_rows(n);
      std::vector<ArbInt> w;
      for (int k = 1; k <= n; ++k) w.push_back(abs_of(s.at(n, k)) * power(n, k - 1));
      return DiscretePMF(1, std::move(w), name);
    }
    case Variant::A220883:
      for (int j = 1; j < n; ++j) factors.emplace_back(ArbInt(j), ArbInt(n + 1));
      return DiscretePMF(0, expand_linear_product(factors), name);
    case Variant::A260887:
      for (int j = 2; j <= n; ++j) factors.emplace_back(ArbInt(j), ArbInt(n));
      return DiscretePMF(0, expand_linear_product(factors), name);
    case Variant::A220884:
      for (int j = 2; j <= n; ++j) factors.emplace_back(ArbInt(j), ArbInt(n + 1 - j));
      return DiscretePMF(0, expand_linear_product(factors), name);
    case Variant::A078937:
    case Variant::A078938:
    case Variant::A078939: {
      const int a = v == Variant::A078937 ? 2 : v == Variant::A078938 ? 3 : 4;
      const auto t = scaled_bell(n, a);
      std::vector<ArbInt> w;
      for (int k = 0; k <= n; ++k) {
        w.push_back(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) * t[static_cast<std::size_t>(n - k)]);
      }
      return DiscretePMF(0, std::move(w), name);
    }
    case Variant::A124323:
    case Variant::A086659: {
      const auto beta = exact::beta_numbers(n);
      std::vector<ArbInt> w;
      const int top = v == Variant::A124323 ? n : n - 1;
      for (int k = 0; k <= top; ++k) {
        w.push_back(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) * beta[static_cast<std::size_t>(n - k)]);
      }
      return DiscretePMF(0, std::move(w), name);
    }
  }
  throw std::invalid_argument("unknown variant triangle");
}

const char* family_name(Family f) {
  switch (f) {
    case Family::Matsunaga: return "matsunaga";
    case Family::WeightedMatsunaga: return "weighted-matsunaga";
    case Family::Arima: return "arima";
    case Family::ArimaReversed: return "arima-reversed";
    case Family::A033306: return "a033306";
    case Family::A056856: return "a056856";
    case Family::A220883: return "a220883";
    case Family::A260887: return "a260887";
    case Family::A220884: return "a220884";
    case Family::A124323: return "a124323";
  }
  return "?";
}

std::vector<Family> all_families() {
  return {Family::Matsunaga, Family::WeightedMatsunaga, Family::Arima,   Family::ArimaReversed, Family::A033306,
          Family::A056856,   Family::A220883,           Family::A260887, Family::A220884,       Family::A124323};
}

Family parse_family(const std::string& name) {
  const std::string t = lower(name);
  for (Family f : all_families()) {
    if (t == family_name(f)) return f;
  }
  throw std::invalid_argument("unknown family: " + name);
}

int family_min_n(Family f) {
  switch (f) {
    case Family::Matsunaga:
    case Family::WeightedMatsunaga: return 4;
    default: return 2;
  }
}

FamilyParams family_params(Family f, int n) {
  require_n(n, family_min_n(f), family_name(f));
  const double x = n;
  const double ln = std::log(x);
  const double w = special::lambert_w(x);
  switch (f) {
    case Family::Matsunaga: {
      constexpr double g = special::kEulerGamma;
      const double z2 = std::numbers::pi * std::numbers::pi / 6.0;
      return {ln + g + 1.0 / (2 * x) + (12 * w - 1) / (12 * x * x),
              ln + g - z2 + 3.0 / (2 * x) + (12 * w - 7) / (12 * x * x), "(log n)^{-1/2}"};
    }
    case Family::WeightedMatsunaga:
      return {kWeightedMu * x + 0.25 - (4 * w - 1) / (16 * x), kWeightedSigma2 * x - 0.125 - 1.0 / (12 * x),
              "n^{-1/2}"};
    case Family::Arima:
    case Family::ArimaReversed: {
      const double d = 2 * x * (w + 1) * (w + 1);
      const double mu = w * (1 - w * w / d);
      const double s2 = w * (1 - w * (3 * w + 2) / d);
      return {f == Family::Arima ? mu : x - mu, s2, "(log n)^{-1/2}"};
    }
    case Family::A033306: {
      const double t = special::lambert_w(0.5 * x);
      return {0.5 * x, (t + 1) * x / 4 - t * (t * t + 2 * t + 2) / (8 * (t + 1) * (t + 1)), "log n/n"};
    }
    case Family::A056856:
    case Family::A220883:
    case Family::A260887:
      return {kWeightedMu * x, kWeightedSigma2 * x, "n^{-1/2}"};
    case Family::A220884:
      return {0.5 * x, x / 6.0, "n^{-1/2}"};
    case Family::A124323:
      return {w, w, "(log n)^{-1/2}"};
  }
  throw std::invalid_argument("unknown family");
}

DiscretePMF family_pmf(Family f, int n) {
  require_n(n, family_min_n(f), family_name(f));
  switch (f) {
    case Family::Matsunaga: return matsunaga_pmf(n);
    case Family::WeightedMatsunaga: return weighted_matsunaga_pmf(n);
    case Family::Arima: return arima_pmf(n);
    case Family::ArimaReversed: return arima_reversed_pmf(n);
    case Family::A033306: return a033306_pmf(n);
    case Family::A056856: return variant_triangle(n, Variant::A056856);
    case Family::A220883: return variant_triangle(n, Variant::A220883);
    case Family::A260887: return variant_triangle(n, Variant::A260887);
    case Family::A220884: return variant_triangle(n, Variant::A220884);
    case Family::A124323: return variant_triangle(n, Variant::A124323);
  }
  throw std::invalid_argument("unknown family");
}

const char* centering_name(Centering c) { return c == Centering::Exact ? "exact" : "asymptotic"; }

LLTReport llt_report(const DiscretePMF& pmf, int n, const FamilyParams& params, Centering centering) {
  const Moments m = moments_exact(pmf);
  LLTReport rep;
  rep.n = n;
  rep.mean_exact = m.mean;
  rep.var_exact = m.variance;
  rep.mu_asym = params.mu;
  rep.sigma2_asym = params.sigma2;
  rep.rate_tag = params.rate_tag;
  rep.centering = centering;
  const double mu = centering == Centering::Exact ? to_double(m.mean) : params.mu;
  const double s2 = centering == Centering::Exact ? to_double(m.variance) : params.sigma2;
  if (!(s2 > 0)) throw std::domain_error("llt_report: variance must be positive for " + pmf.name());
  const double s = std::sqrt(s2);
  double sup = 0.0;
  for (int k = pmf.k_min(); k <= pmf.k_max(); ++k) {
    const double dev = std::fabs(s * pmf.probability_double(k) - normal_density((k - mu) / s));
    sup = std::max(sup, dev);
  }
  rep.sup_deviation = sup;
  return rep;
}

LLTReport llt_report(Family f, int n, Centering centering) {
  return llt_report(family_pmf(f, n), n, family_params(f, n), centering);
}

double decay_exponent(const std::vector<std::pair<int, double>>& points) {
  if (points.size() < 2) throw std::invalid_argument("decay_exponent: need at least two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [n, d] : points) {
    if (n <= 0 || !(d > 0)) throw std::domain_error("decay_exponent: n and deviation must be positive");
    const double x = std::log(static_cast<double>(n));
    const double y = std::log(d);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(points.size());
  const double den = m * sxx - sx * sx;
  if (den == 0) throw std::domain_error("decay_exponent: all n are equal");
  return (m * sxy - sx * sy) / den;
}

double bnk_ratio_uniformity(int n) {
  require_n(n, 4, "bnk_ratio_uniformity");
  const auto m = exact::matsunaga_rows(n);
  const auto s = exact::stirling_signed_rows(n);
  const ArbInt beta = exact::beta_numbers(n).back();
  ArbRat worst = 0;
  for (int k = 1; k <= n; ++k) {
    ArbRat d = make_rat(m.at(n, k), beta * s.at(n, k)) - 1;
    if (d < 0) d = -d;
    if (d > worst) worst = d;
  }
  return to_double(worst);
}

}  // namespace bell::dist
