// One PASS/FAIL line per acceptance criterion. With an argument, runs only
// that criterion; exit status is 1 when any selected criterion fails.

#include "bell/asymptotics.hpp"
#include "bell/cli.hpp"
#include "bell/distributions.hpp"
#include "bell/exact.hpp"
#include "bell/partition.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using bell::ArbInt;
using bell::ArbRat;
namespace ex = bell::exact;
namespace as = bell::asym;
namespace ds = bell::dist;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("violated: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<void(Outcome&)> body;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

std::vector<ArbInt> ints(std::initializer_list<long> xs) {
  std::vector<ArbInt> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

ArbInt abs_of(const ArbInt& x) { return x < 0 ? ArbInt(-x) : x; }

ArbInt upow(long base, long e) {
  ArbInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return r;
}

std::string text_table(const std::string& seq, int N) {
  std::ostringstream os;
  bell::cli::cmd_table(seq, N, {}, os);
  return os.str();
}

bool contains_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  std::string l;
  while (std::getline(in, l)) {
    while (!l.empty() && l.back() == ' ') l.pop_back();
    if (l == line) return true;
  }
  return false;
}

void tables(Outcome& o) {
  const std::vector<std::string> t1 = {
      "1: 0",
      "2: -1 1",
      "3: -1 0 1",
      "4: -28 44 -20 4",
      "5: 124 -330 285 -90 11",
      "6: -4176 9254 -7515 2945 -549 41",
      "7: 87408 -220990 210483 -98455 24507 -3115 162",
  };
  const std::vector<std::string> t2 = {
      "2: -2 4",
      "3: -3 0 27",
      "4: -112 704 -1280 1024",
      "5: 620 -8250 35625 -56250 34375",
      "6: -25056 333144 -1623240 3816720 -4269024 1912896",
  };
  const std::vector<std::string> t3 = {
      "1: 1 1",
      "2: 2 2 1",
      "3: 5 6 3 1",
      "4: 15 20 12 4 1",
      "5: 52 75 50 20 5 1",
      "6: 203 312 225 100 30 6 1",
      "7: 877 1421 1092 525 175 42 7 1",
  };
  const auto check = [&](const std::string& seq, int N, const std::vector<std::string>& rows) {
    const std::string text = text_table(seq, N);
    for (const auto& r : rows) o.require(contains_line(text, r), seq + " row \"" + r + "\"");
  };
  check("matsunaga", 7, t1);
  check("weighted-matsunaga", 6, t2);
  check("arima", 7, t3);
  const auto b = ex::bell_numbers(7);
  const auto w = ex::weighted_matsunaga_rows(6);
  for (int n = 2; n <= 6; ++n) {
    o.require(1 + w.row_sum(n) / bell::factorial(n) == b[static_cast<std::size_t>(n)],
              "weighted row " + std::to_string(n) + " sums to (B_n - 1) n!");
  }
}

void historical(Outcome& o) {
  const std::pair<int, long> worked[] = {{3, 8}, {4, 84}, {5, 1224}};
  o.require(ex::bell_matsunaga(2).result == 2, "B_2 = 2");
  for (auto [n, inner] : worked) {
    const auto t = ex::bell_matsunaga(n);
    o.require(t.partial_values.back() == inner, "inner sum " + std::to_string(inner) + " at n=" + std::to_string(n));
  }
  o.require(ex::bell_matsunaga(3).result == 5 && ex::bell_matsunaga(4).result == 15 &&
                ex::bell_matsunaga(5).result == 52,
            "B_3, B_4, B_5 = 5, 15, 52");
  const auto b = ex::bell_numbers(25);
  for (int n = 2; n <= 25; ++n) {
    o.require(ex::bell_matsunaga(n).result == b[static_cast<std::size_t>(n)], "Horner route at n=" + std::to_string(n));
  }
}

void lists(Outcome& o) {
  const auto beta = ex::beta_numbers(12);
  o.require(std::vector<ArbInt>(beta.begin() + 1, beta.end()) ==
                ints({0, 1, 1, 4, 11, 41, 162, 715, 3425, 17722, 98253, 580317}),
            "beta_1..beta_12");
  const auto p = ex::pn_at_n(10);
  o.require(p.normalized == ints({0, 3, 5, 130, 1126, 16639, 244406, 4107921, 74991344, 1486313664}),
            "P_n(n)/n! for n = 1..10");
}

void problem56(Outcome& o) {
  const auto n = ex::solve_bell_inverse(ArbInt(678570));
  o.require(n.has_value() && *n == 11, "B_n = 678570 solved by n = 11");
}

void oracle(Outcome& o) {
  for (int n = 1; n <= 11; ++n) {
    const auto st = bell::oracle::collect_stats(n);
    const auto b = ex::bell_numbers(n);
    const auto beta = ex::beta_numbers(n);
    const std::string at = " at n=" + std::to_string(n);
    o.require(st.total == b.back(), "enumeration total" + at);
    o.require(st.no_singleton_total == beta.back(), "singleton-free total" + at);
    for (const auto& [shape, count] : st.by_shape) {
      o.require(count == ex::bell_polynomial_coefficient(shape, n), "shape " + shape.to_string() + at);
    }
    o.require(st.by_shape.size() == ex::shapes_of(n).size(), "every shape occurs" + at);
    for (int k = 1; k <= n; ++k) {
      o.require(st.block_of_element1_size_hist[static_cast<std::size_t>(k)] ==
                    bell::binomial(n - 1, k - 1) * b[static_cast<std::size_t>(n - k)],
                "block of element 1, k=" + std::to_string(k) + at);
    }
    for (int k = 0; k <= n; ++k) {
      o.require(st.singleton_count_hist[static_cast<std::size_t>(k)] ==
                    bell::binomial(n, k) * beta[static_cast<std::size_t>(n - k)],
                "singleton histogram, k=" + std::to_string(k) + at);
    }
  }
}

void identities(Outcome& o) {
  const auto m = ex::matsunaga_rows(25);
  const auto b = ex::bell_numbers(30);
  const auto beta = ex::beta_numbers(51);
  const auto w = ex::weighted_matsunaga_rows(25);
  for (int n = 1; n <= 25; ++n) o.require(m.row_sum(n) == 0, "M row sum at n=" + std::to_string(n));
  for (int n = 0; n <= 30; ++n) {
    o.require(b[static_cast<std::size_t>(n)] == beta[static_cast<std::size_t>(n + 1)] + beta[static_cast<std::size_t>(n)],
              "B_n = beta_{n+1} + beta_n at n=" + std::to_string(n));
  }
  for (int n = 2; n <= 25; ++n) {
    o.require(w.row_sum(n) == (b[static_cast<std::size_t>(n)] - 1) * bell::factorial(n),
              "sum M(n,k) n^k at n=" + std::to_string(n));
  }
  int exceptions = 0;
  for (int n = 1; n <= 25; ++n) {
    const auto row = ex::abs_matsunaga_row(n);
    for (int k = 1; k <= n; ++k) {
      const ArbInt& got = row[static_cast<std::size_t>(k - 1)];
      const ArbInt truth = abs_of(m.at(n, k));
      if (got == truth) continue;
      ++exceptions;
      o.require(n == 3 && k == 1 && got == -1, "alternating form differs at (" + std::to_string(n) + "," +
                                                   std::to_string(k) + ")");
    }
  }
  o.require(exceptions == 1, "exactly one exception to the alternating form");
  for (int n = 4; n <= 20; ++n) {
    for (const ArbRat& v : {ArbRat(0), ArbRat(1), ArbRat(-2), ArbRat(n), bell::make_rat(1, 2), bell::make_rat(-7, 3),
                            bell::make_rat(22, 7)}) {
      o.require(ex::pnv_closed(n, v) == ex::pnv_eval(n, v),
                "P_n(v) closed form at n=" + std::to_string(n) + " v=" + bell::to_string(v));
    }
  }
  for (int n = 3; n <= 50; ++n) {
    o.require(bell::make_rat(beta[static_cast<std::size_t>(n + 1)], n + 1) >=
                  bell::make_rat(beta[static_cast<std::size_t>(n)], n),
              "beta_{n+1}/(n+1) >= beta_n/n at n=" + std::to_string(n));
  }
  for (int n = 2; n <= 20; ++n) {
    const auto s = ex::stirling_signed_rows(n + 1);
    const auto a = ds::variant_triangle(n, ds::Variant::A220883);
    const auto c = ds::variant_triangle(n, ds::Variant::A260887);
    for (int k = 0; k < n; ++k) {
      o.require(a.weight(k) == abs_of(s.at(n, k + 1)) * upow(n + 1, k), "A220883 closed form");
      ArbInt alt = 0;
      for (int j = 0; j <= k; ++j) alt += ((k - j) % 2 ? -1 : 1) * abs_of(s.at(n + 1, j + 1));
      o.require(c.weight(k) == upow(n, k) * alt, "A260887 closed form");
    }
  }
}

void moments(Outcome& o) {
  for (int n = 4; n <= 40; ++n) {
    const std::string at = " at n=" + std::to_string(n);
    const auto eq = [](const ds::Moments& a, const ds::Moments& b) { return a.mean == b.mean && a.variance == b.variance; };
    o.require(eq(ds::moments_exact(ds::matsunaga_pmf(n)), ds::matsunaga_moments_closed(n)), "X_n" + at);
    o.require(eq(ds::moments_exact(ds::weighted_matsunaga_pmf(n)), ds::weighted_matsunaga_moments_closed(n)), "Y_n" + at);
    o.require(eq(ds::moments_exact(ds::arima_pmf(n)), ds::arima_moments_closed(n)), "Arima" + at);
    o.require(eq(ds::moments_exact(ds::a033306_pmf(n)), ds::a033306_moments_closed(n)), "A033306" + at);
  }
}

void decay(Outcome& o) {
  const auto bells = ex::bell_numbers(200);
  const auto beta = ex::beta_numbers(200);
  const auto tilde = as::tilde_bell_exact(200);
  const auto series = [&](const char* name, auto approx, const std::vector<ArbInt>& exact) {
    std::string line = std::string(name) + " rel. log-error";
    double prev = INFINITY;
    for (int n : {50, 100, 200}) {
      const double le = bell::log_abs(exact[static_cast<std::size_t>(n)]);
      const double err = std::fabs(approx(n).log_value - le) / le;
      line += " " + fmt(err);
      o.require(err < prev, std::string(name) + " decreases at n=" + std::to_string(n));
      prev = err;
    }
    o.note(line);
  };
  series("beta", as::beta_asym, beta);
  series("bell", as::bell_asym, bells);
  series("tilde-bell", as::tilde_bell_asym, tilde);

  for (int n : {30, 60, 100}) {
    const auto s = ex::stirling_signed_rows(n);
    for (auto regime : {as::StirlingRegime::SmallK, as::StirlingRegime::Central, as::StirlingRegime::LargeK}) {
      const auto k = as::regime_center(n, regime);
      if (!k) continue;
      const double rel = std::expm1(as::stirling_asym(n, *k).approx.log_value - bell::log_abs(s.at(n, *k)));
      const std::string tag = std::string(as::regime_name(regime)) + " (" + std::to_string(n) + "," +
                              std::to_string(*k) + ") rel. error " + fmt(rel);
      o.note(tag);
      o.require(std::fabs(rel) <= 0.05, "|s(n,k)| within 5%: " + tag);
    }
  }

  std::string line = "bnk ratio";
  double prev = INFINITY;
  for (int n : {10, 20, 50, 100}) {
    const double r = ds::bnk_ratio_uniformity(n);
    line += " " + fmt(r);
    o.require(r < prev, "bnk ratio decreases at n=" + std::to_string(n));
    prev = r;
  }
  o.note(line);
}

void llt(Outcome& o) {
  const auto ladder = [&](ds::Family f, std::vector<int> ns) {
    std::string line = std::string(ds::family_name(f)) + " sup deviation";
    std::vector<double> d;
    for (int n : ns) {
      d.push_back(ds::llt_report(f, n, ds::Centering::Asymptotic).sup_deviation);
      line += " " + fmt(d.back());
    }
    // Largest rung against smallest; intermediate rungs are reported only.
    bool stepwise = true;
    for (std::size_t i = 1; i < d.size(); ++i) stepwise = stepwise && d[i] < d[i - 1];
    if (!stepwise) line += " (not monotone between rungs)";
    o.note(line);
    o.require(d.back() < d.front(), std::string(ds::family_name(f)) + " deviation at n=" + std::to_string(ns.back()) +
                                        " below n=" + std::to_string(ns.front()));
  };
  ladder(ds::Family::Matsunaga, {20, 60, 180});
  ladder(ds::Family::Arima, {20, 60, 180});
  for (auto f : {ds::Family::WeightedMatsunaga, ds::Family::A056856, ds::Family::A220884, ds::Family::A033306}) {
    ladder(f, {20, 40, 80});
  }
}

void spots(Outcome& o) {
  o.require(std::fabs(as::phi(1.0) - (2 * std::numbers::ln2 - 1)) <= 1e-12, "phi(1) = 2 log 2 - 1");
  o.require(std::fabs(as::tau_of_rho(1.0) - std::numbers::ln2) <= 1e-12, "tau(1) = log 2");
  o.require(ds::kWeightedMu == std::numbers::ln2 && ds::kWeightedSigma2 == std::numbers::ln2 - 0.5,
            "weighted constants");
  for (int n : {40, 400, 4000}) {
    const auto p = ds::family_params(ds::Family::WeightedMatsunaga, n);
    o.require(std::fabs(p.mu / n - std::numbers::ln2) < 1.0 / n && std::fabs(p.sigma2 / n - (std::numbers::ln2 - 0.5)) < 1.0 / n,
              "weighted-matsunaga parameters at n=" + std::to_string(n));
    for (auto f : {ds::Family::A056856, ds::Family::A220883, ds::Family::A260887}) {
      const auto q = ds::family_params(f, n);
      o.require(q.mu == std::numbers::ln2 * n && q.sigma2 == (std::numbers::ln2 - 0.5) * n,
                std::string(ds::family_name(f)) + " parameters at n=" + std::to_string(n));
    }
  }
  double best = -INFINITY;
  double arg = 0.0;
  for (int i = 1; i <= 500; ++i) {
    const double rho = 0.01 * i;
    if (as::phi(rho) > best) {
      best = as::phi(rho);
      arg = rho;
    }
  }
  o.note("phi grid argmax " + fmt(arg));
  o.require(std::fabs(arg - 1.0) < 1e-9, "phi grid argmax at 1.00");
}

void bench(Outcome& o) {
  const auto recs = bell::cli::run_bench({8, 20, 50, 100}, 1, {});
  double prev = 0.0;
  std::string line = "bits ratio";
  for (std::size_t i = 0; i + 1 < recs.size(); i += 2) {
    const auto& a = recs[i].procedure == "matsunaga" ? recs[i] : recs[i + 1];
    const auto& b = recs[i].procedure == "matsunaga" ? recs[i + 1] : recs[i];
    const std::string at = " at n=" + std::to_string(a.n);
    o.require(a.result == b.result && a.result == ex::bell_numbers(a.n).back(), "equal B_n" + at);
    o.require(a.max_intermediate_bits > b.max_intermediate_bits, "Matsunaga uses more bits" + at);
    const double ratio = static_cast<double>(a.max_intermediate_bits) / static_cast<double>(b.max_intermediate_bits);
    line += " " + fmt(ratio);
    o.require(ratio > prev, "bits ratio increases" + at);
    prev = ratio;
  }
  o.note(line);
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "table reproduction", 1.0, tables},
      {2, "historical procedure", 1.0, historical},
      {3, "sequence lists", 1.0, lists},
      {4, "inverse Bell problem", 1.0, problem56},
      {5, "oracle equivalence", 60.0, oracle},
      {6, "identity suite", 30.0, identities},
      {7, "two-route moments", 30.0, moments},
      {8, "asymptotic decay", 60.0, decay},
      {9, "local limit decay", 300.0, llt},
      {10, "spot values", 1.0, spots},
      {11, "bench contract", 60.0, bench},
  };
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  if (argc > 2 || only < 0 || only > static_cast<int>(all.size())) {
    std::fprintf(stderr, "usage: acceptance [criterion 1..%zu]\n", all.size());
    return 2;
  }
  bool all_ok = true;
  for (const auto& c : all) {
    if (only && c.id != only) continue;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_seconds) {
      o.ok = false;
      o.notes.push_back("over time limit of " + fmt(c.limit_seconds) + " s");
    }
    std::printf("%s  criterion %d: %s (%.3f s)\n", o.ok ? "PASS" : "FAIL", c.id, c.title.c_str(), secs);
    for (const auto& n : o.notes) std::printf("      %s\n", n.c_str());
    all_ok = all_ok && o.ok;
  }
  return all_ok ? 0 : 1;
}
