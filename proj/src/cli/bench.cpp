#include "internal.hpp"

#include "bell/exact.hpp"

#include <algorithm>
#include <cmath>

namespace bell::cli {

namespace {

template <class F>
std::chrono::nanoseconds best_of(int repeats, F&& run) {
  auto best = std::chrono::nanoseconds::max();
  for (int i = 0; i < repeats; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    run();
    best = std::min(best, std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0));
  }
  return best;
}

}  // namespace

std::vector<BenchRecord> run_bench(const std::vector<int>& ns, int repeats, const Options& opt) {
  if (ns.empty()) throw UsageError("bench needs at least one n");
  detail::require_range(repeats, 1, 1000, "repeats");
  const int cap_m = detail::cap_for(opt, kBenchCapMatsunaga);
  const int cap_a = detail::cap_for(opt, kBenchCapArima);
  std::vector<BenchRecord> out;
  for (int n : ns) {
    detail::require_range(n, 2, std::min(cap_m, cap_a), "n for bench");
    exact::HornerTrace h;
    const auto tm = best_of(repeats, [&] { h = exact::bell_matsunaga(n); });
    exact::ArimaTrace a;
    const auto ta = best_of(repeats, [&] { a = exact::bell_arima(n); });
    if (h.result != a.result) {
      throw std::logic_error("bench: procedures disagree at n=" + std::to_string(n));
    }
    out.push_back({n, "matsunaga", tm, h.max_bits, h.result});
    out.push_back({n, "arima", ta, a.max_bits, a.result});
  }
  return out;
}

int cmd_bench(const std::vector<int>& ns, int repeats, const Options& opt, std::ostream& out) {
  const auto records = run_bench(ns, repeats, opt);
  detail::Grid g{{"n", "procedure", "wall_time_us", "max_intermediate_bits", "reference_bits", "bits_ratio", "result"},
                 {}};
  for (std::size_t i = 0; i < records.size(); i += 2) {
    const auto& m = records[i];
    const auto& a = records[i + 1];
    const double ratio = static_cast<double>(m.max_intermediate_bits) / static_cast<double>(a.max_intermediate_bits);
    // log2(B_n n!) for the Stirling pipeline, log2(B_n) for the binomial one.
    const double log2_bn = log_abs(a.result) / std::log(2.0);
    const double log2_nf = std::lgamma(m.n + 1.0) / std::log(2.0);
    for (const auto* r : {&m, &a}) {
      g.rows.push_back({r->n, r->procedure, static_cast<double>(r->wall_time.count()) / 1000.0,
                        r->max_intermediate_bits, r == &m ? log2_bn + log2_nf : log2_bn, ratio, to_string(r->result)});
    }
  }
  detail::emit_grid(g, opt.format, "Matsunaga (Stirling pipeline) against Arima (b-table) for B_n", "records",
                    {}, out);
  return kExitOk;
}

}  // namespace bell::cli
