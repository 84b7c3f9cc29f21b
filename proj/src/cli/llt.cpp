#include "internal.hpp"

#include "bell/distributions.hpp"

namespace bell::cli {

int cmd_llt(const std::string& family, const std::vector<int>& ladder, dist::Centering centering, bool histogram,
            const Options& opt, std::ostream& out) {
  dist::Family f;
  try {
    f = dist::parse_family(family);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (ladder.empty()) throw UsageError("llt needs a ladder of n values");
  const int cap = detail::cap_for(opt, f == dist::Family::WeightedMatsunaga ? 250 : 400);
  for (int n : ladder) detail::require_range(n, dist::family_min_n(f), cap, std::string("n for ") + family);

  detail::json extra = {{"family", dist::family_name(f)}, {"centering", dist::centering_name(centering)}};
  if (histogram) {
    detail::Grid g{{"n", "k", "probability"}, {}};
    for (int n : ladder) {
      const auto pmf = dist::family_pmf(f, n);
      for (int k = pmf.k_min(); k <= pmf.k_max(); ++k) g.rows.push_back({n, k, pmf.probability_double(k)});
    }
    detail::emit_grid(g, opt.format, std::string(dist::family_name(f)) + " histogram", "histogram", extra, out);
    return kExitOk;
  }

  detail::Grid g{{"n", "mean_exact", "var_exact", "mu_asym", "sigma2_asym", "sup_deviation", "rate_tag"}, {}};
  std::vector<std::pair<int, double>> points;
  for (int n : ladder) {
    const auto r = dist::llt_report(f, n, centering);
    // Exact rationals grow to thousands of digits; the text view shows decimals.
    const auto moment = [&](const ArbRat& q) -> detail::json {
      if (opt.format == Format::Text) return to_double(q);
      return to_string(q);
    };
    g.rows.push_back({n, moment(r.mean_exact), moment(r.var_exact), r.mu_asym, r.sigma2_asym, r.sup_deviation,
                      r.rate_tag});
    points.emplace_back(n, r.sup_deviation);
  }
  std::optional<double> slope;
  bool distinct = false;
  for (const auto& p : points) distinct = distinct || p.first != points.front().first;
  if (distinct) slope = dist::decay_exponent(points);
  if (slope) extra["decay_exponent"] = *slope;
  detail::emit_grid(g, opt.format,
                    std::string(dist::family_name(f)) + " local limit deviation (" +
                        dist::centering_name(centering) + " centering)",
                    "reports", extra, out);
  if (slope && opt.format == Format::Text) {
    out << "decay exponent (log-log fit of sup_deviation on n): " << detail::fmt_double(*slope, 4) << '\n';
  }
  return kExitOk;
}

}  // namespace bell::cli
