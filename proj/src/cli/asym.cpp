#include "internal.hpp"

#include "bell/asymptotics.hpp"
#include "bell/distributions.hpp"
#include "bell/exact.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace bell::cli {

namespace {

using detail::Grid;
using detail::json;

struct TargetSpec {
  int min_n;
  int cap;
};

const std::map<std::string, TargetSpec>& targets() {
  static const std::map<std::string, TargetSpec> m{
      {"beta", {2, 2000}},       {"bell", {2, 2000}},     {"tilde-bell", {2, 1000}}, {"stirling", {4, 300}},
      {"beta-ratio", {3, 2000}}, {"bnk-ratio", {4, 200}}, {"bell-growth", {2, 2000}}, {"phi", {0, 0}},
  };
  return m;
}

int max_of(const std::vector<int>& v) { return *std::max_element(v.begin(), v.end()); }

void add_error_row(Grid& g, int n, double log_exact, const asym::ApproxValue& a) {
  const double d = a.log_value - log_exact;
  g.rows.push_back({n, log_exact, a.log_value, d, std::expm1(d), a.error_order});
}

Grid log_error_grid(const std::vector<int>& ladder, const std::vector<ArbInt>& exact,
                    asym::ApproxValue (*approx)(int)) {
  Grid g{{"n", "log_exact", "log_approx", "log_error", "rel_error", "order"}, {}};
  for (int n : ladder) add_error_row(g, n, log_abs(exact[static_cast<std::size_t>(n)]), approx(n));
  return g;
}

}  // namespace

std::vector<std::string> asym_targets() {
  std::vector<std::string> out;
  for (const auto& [name, spec] : targets()) out.push_back(name);
  return out;
}

int cmd_asym(const std::string& target, const std::vector<int>& ladder, const Options& opt, std::ostream& out) {
  const auto it = targets().find(target);
  if (it == targets().end()) throw UsageError("unknown asymptotic target '" + target + "'");
  if (target != "phi") {
    if (ladder.empty()) throw UsageError("asym " + target + " needs a ladder of n values");
    for (int n : ladder) detail::require_range(n, it->second.min_n, detail::cap_for(opt, it->second.cap), "n for " + target);
  }
  const json extra = {{"target", target}};

  if (target == "beta") {
    const auto b = exact::beta_numbers(max_of(ladder));
    detail::emit_grid(log_error_grid(ladder, b, asym::beta_asym), opt.format, "beta_n saddle-point approximation",
                      "rows", extra, out);
  } else if (target == "bell") {
    const auto b = exact::bell_numbers(max_of(ladder));
    detail::emit_grid(log_error_grid(ladder, b, asym::bell_asym), opt.format, "B_n saddle-point approximation", "rows",
                      extra, out);
  } else if (target == "tilde-bell") {
    const auto t = asym::tilde_bell_exact(max_of(ladder));
    detail::emit_grid(log_error_grid(ladder, t, asym::tilde_bell_asym), opt.format,
                      "Poisson(2) moments, saddle-point approximation", "rows", extra, out);
  } else if (target == "bell-growth") {
    const auto b = exact::bell_numbers(max_of(ladder));
    Grid g{{"n", "log_Bn_nfact", "growth", "ratio"}, {}};
    for (int n : ladder) {
      const double exact_log = log_abs(b[static_cast<std::size_t>(n)]) + std::lgamma(n + 1.0);
      const double growth = asym::log_bell_factorial_growth(n);
      g.rows.push_back({n, exact_log, growth, exact_log / growth});
    }
    detail::emit_grid(g, opt.format, "log(B_n n!) against 2n log n - n log log n - n", "rows", extra, out);
  } else if (target == "stirling") {
    const auto s = exact::stirling_signed_rows(max_of(ladder));
    Grid g{{"n", "regime", "k", "log_exact", "log_approx", "rel_error", "order", "saddle", "V"}, {}};
    for (int n : ladder) {
      for (auto regime : {asym::StirlingRegime::SmallK, asym::StirlingRegime::Central, asym::StirlingRegime::LargeK}) {
        const auto k = asym::regime_center(n, regime);
        if (!k) continue;
        const auto a = asym::stirling_asym(n, *k);
        const double le = log_abs(s.at(n, *k));
        g.rows.push_back({n, asym::regime_name(regime), *k, le, a.approx.log_value,
                          std::expm1(a.approx.log_value - le), a.approx.error_order,
                          a.saddle ? json(a.saddle->root) : json(), a.saddle ? json(a.variance) : json()});
      }
    }
    detail::emit_grid(g, opt.format, "|s(n,k)| at the regime centres", "rows", extra, out);
  } else if (target == "beta-ratio") {
    const auto b = exact::beta_numbers(max_of(ladder));
    Grid g{{"n", "l", "exact", "approx", "rel_error", "order"}, {}};
    for (int n : ladder) {
      for (int l : {1, 2}) {
        const double ex = to_double(make_rat(b[static_cast<std::size_t>(n - l)], b[static_cast<std::size_t>(n)]));
        const double ap = asym::beta_ratio_asym(n, l);
        g.rows.push_back({n, l, ex, ap, ap / ex - 1.0, "O(n^-1 l^2 log n)"});
      }
    }
    detail::emit_grid(g, opt.format, "beta_{n-l} / beta_n against (W(n)/n)^l", "rows", extra, out);
  } else if (target == "bnk-ratio") {
    Grid g{{"n", "max_deviation"}, {}};
    for (int n : ladder) g.rows.push_back({n, dist::bnk_ratio_uniformity(n)});
    detail::emit_grid(g, opt.format, "max_k |M(n,k) / (beta_n s(n,k)) - 1|", "rows", extra, out);
  } else {
    int best = 1;
    for (int i = 1; i <= 500; ++i) {
      if (asym::phi(i / 100.0) > asym::phi(best / 100.0)) best = i;
    }
    Grid g{{"quantity", "value"}, {}};
    g.rows.push_back({"argmax rho on 0.01..5.00", best / 100.0});
    g.rows.push_back({"max phi", asym::phi(best / 100.0)});
    g.rows.push_back({"2 log 2 - 1", 2 * std::numbers::ln2 - 1});
    g.rows.push_back({"tau(1)", asym::tau_of_rho(1.0)});
    g.rows.push_back({"log 2", std::numbers::ln2});
    detail::emit_grid(g, opt.format, "phi(rho) = rho (1 - log rho) log(1 + 1/rho) + log(1 + rho) - 1", "rows", extra,
                      out);
  }
  return kExitOk;
}

}  // namespace bell::cli
