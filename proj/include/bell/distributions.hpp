#pragma once

// Discrete distributions built from the exact triangles, their exact and
// asymptotic moments, and lattice local-limit deviations.

#include "bell/arb.hpp"

#include <numbers>
#include <string>
#include <utility>
#include <vector>

namespace bell::dist {

// Weights over k = k_min .. k_min + size - 1, all >= 0 with positive total.
class DiscretePMF {
 public:
  DiscretePMF(int k_min, std::vector<ArbInt> weights, std::string name);

  int k_min() const { return k_min_; }
  int k_max() const { return k_min_ + static_cast<int>(weights_.size()) - 1; }
  const std::vector<ArbInt>& weights() const { return weights_; }
  const ArbInt& total() const { return total_; }
  const std::string& name() const { return name_; }

  const ArbInt& weight(int k) const;  // throws outside the support window
  ArbRat probability(int k) const;
  double probability_double(int k) const;

 private:
  int k_min_;
  std::vector<ArbInt> weights_;
  ArbInt total_;
  std::string name_;
};

DiscretePMF pmf_from_weights(int k_min, std::vector<ArbInt> weights, std::string name);

struct Moments {
  ArbRat mean;
  ArbRat variance;
};
Moments moments_exact(const DiscretePMF& pmf);

inline constexpr double kWeightedMu = std::numbers::ln2;
inline constexpr double kWeightedSigma2 = std::numbers::ln2 - 0.5;

// |M(n,k)|, k = 1..n.
DiscretePMF matsunaga_pmf(int n);
// Harmonic-number closed forms; n >= 4.
Moments matsunaga_moments_closed(int n);

// |M(n,k)| n^k, k = 1..n; n >= 4.
DiscretePMF weighted_matsunaga_pmf(int n);
Moments weighted_matsunaga_moments_closed(int n);
// Main Gaussian term of P(Y_n = k) times its n^{-1/2} correction.
double weighted_refined_gaussian(int n, int k);

// C(n,k) B(n-k), k = 0..n, and the reversed row C(n,k) B(k).
DiscretePMF arima_pmf(int n);
DiscretePMF arima_reversed_pmf(int n);
// mean n B_n / B_{n+1}, variance (n(n-1) B_{n-1} + n B_n) / B_{n+1} - mean^2.
Moments arima_moments_closed(int n);
// Total variation distance between pmf (supported on k >= 0) and Poisson(lambda).
double poisson_tv_distance(const DiscretePMF& pmf, double lambda);

// C(n,k) B(k) B(n-k), k = 0..n.
DiscretePMF a033306_pmf(int n);
// mean n/2, variance n/4 + n(n-1) T_{n-1} / (4 T_n) with T the Poisson(2) moments.
Moments a033306_moments_closed(int n);

enum class Variant { A056856, A220883, A260887, A220884, A078937, A078938, A078939, A124323, A086659 };
Variant parse_variant(const std::string& tag);  // case-insensitive, throws std::invalid_argument
const char* variant_name(Variant v);
std::vector<Variant> all_variants();
DiscretePMF variant_triangle(int n, Variant v);

// Coefficients of prod_j (a_j + b_j z), lowest degree first.
std::vector<ArbInt> expand_linear_product(const std::vector<std::pair<ArbInt, ArbInt>>& factors);

enum class Family {
  Matsunaga,
  WeightedMatsunaga,
  Arima,
  ArimaReversed,
  A033306,
  A056856,
  A220883,
  A260887,
  A220884,
  A124323,
};
Family parse_family(const std::string& name);  // throws std::invalid_argument
const char* family_name(Family f);
std::vector<Family> all_families();
int family_min_n(Family f);

struct FamilyParams {
  double mu = 0.0;
  double sigma2 = 0.0;
  std::string rate_tag;
};
FamilyParams family_params(Family f, int n);
DiscretePMF family_pmf(Family f, int n);

enum class Centering { Asymptotic, Exact };
const char* centering_name(Centering c);

struct LLTReport {
  int n = 0;
  ArbRat mean_exact;
  ArbRat var_exact;
  double mu_asym = 0.0;
  double sigma2_asym = 0.0;
  double sup_deviation = 0.0;
  std::string rate_tag;
  Centering centering = Centering::Asymptotic;
};

// sup over the support of |sigma P(X = k) - e^{-x^2/2} / sqrt(2 pi)| with
// x = (k - mu) / sigma.
// Throws std::domain_error when the centering variance is not positive.
LLTReport llt_report(const DiscretePMF& pmf, int n, const FamilyParams& params, Centering centering);
LLTReport llt_report(Family f, int n, Centering centering);

// Least-squares slope of log(deviation) against log(n).
double decay_exponent(const std::vector<std::pair<int, double>>& points);

// max_k |M(n,k) / (beta_n s(n,k)) - 1|; n >= 4.
double bnk_ratio_uniformity(int n);

}  // namespace bell::dist
