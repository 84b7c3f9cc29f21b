#include "bell/asymptotics.hpp"
#include "bell/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace bell::cli;

struct Args {
  std::string format = "text";
  std::string out_path;
  int max_n = -1;

  std::string name;
  std::string ladder;
  std::string path;
  int n = 0;
  int repeats = 3;
  int offset = 0;
  bool histogram = false;
  std::string centering = "asymptotic";
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bell numbers: the Matsunaga and Arima procedures, identities, asymptotics and local limit laws"};
  app.require_subcommand(1);
  app.fallthrough();
  Args a;
  app.add_option("--format", a.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--out", a.out_path, "Write output to this file instead of stdout");
  app.add_option("--max-n", a.max_n, "Override the per-command size cap")->check(CLI::NonNegativeNumber);

  auto* table = app.add_subcommand("table", "Print an exact sequence or triangle");
  table->add_option("sequence", a.name, "One of: " + CLI::detail::join(table_sequences(), ", "))->required();
  table->add_option("N", a.n, "Largest n")->required();

  auto* verify = app.add_subcommand("verify", "Run an identity suite; exit 1 on any failure");
  verify->add_option("suite", a.name, "identities, oracle, variants or all")->required();
  verify->add_option("N", a.n, "Largest n")->required();

  auto* asym = app.add_subcommand("asym", "Compare an asymptotic formula with exact values");
  asym->add_option("target", a.name, "One of: " + CLI::detail::join(asym_targets(), ", "))->required();
  asym->add_option("ladder", a.ladder, "Comma-separated n values");

  auto* llt = app.add_subcommand("llt", "Local limit deviation reports");
  llt->add_option("family", a.name, "Distribution family")->required();
  llt->add_option("ladder", a.ladder, "Comma-separated n values")->required();
  llt->add_option("--centering", a.centering, "Centre at asymptotic or exact moments")
      ->check(CLI::IsMember({"asymptotic", "exact"}));
  llt->add_flag("--histogram", a.histogram, "Emit (n, k, probability) rows instead of reports");

  auto* bench = app.add_subcommand("bench", "Time both historical procedures and record operand sizes");
  a.ladder = "8,20,50,100";
  bench->add_option("ladder", a.ladder, "Comma-separated n values")->capture_default_str();
  bench->add_option("--repeats", a.repeats, "Timing repeats (best is kept)")->capture_default_str()->check(CLI::PositiveNumber);

  auto* oeis = app.add_subcommand("oeis-check", "Compare a sequence with an OEIS b-file");
  oeis->add_option("sequence", a.name, "Artifact name or OEIS id")->required();
  oeis->add_option("bfile", a.path, "Path to the b-file")->required();
  auto* offset_opt = oeis->add_option("--offset", a.offset, "Override the registry offset");

  app.add_subcommand("genjiko", "List the 52 Genji-ko patterns");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  Options opt;
  std::ofstream file;
  std::ostream* out = &std::cout;
  try {
    opt.format = parse_format(a.format);
    if (a.max_n >= 0) opt.max_n = a.max_n;
    if (!a.out_path.empty()) {
      file.open(a.out_path, std::ios::binary);
      if (!file) {
        std::cerr << "error: cannot open " << a.out_path << " for writing\n";
        return kExitInput;
      }
      out = &file;
    }
    const auto* sub = app.get_subcommands().front();
    const std::string cmd = sub->get_name();
    if (cmd == "table") return cmd_table(a.name, a.n, opt, *out);
    if (cmd == "verify") return cmd_verify(a.name, a.n, opt, *out);
    if (cmd == "asym") return cmd_asym(a.name, a.ladder.empty() ? std::vector<int>{} : parse_ladder(a.ladder), opt, *out);
    if (cmd == "llt") {
      const auto c = a.centering == "exact" ? bell::dist::Centering::Exact : bell::dist::Centering::Asymptotic;
      return cmd_llt(a.name, parse_ladder(a.ladder), c, a.histogram, opt, *out);
    }
    if (cmd == "bench") return cmd_bench(parse_ladder(a.ladder), a.repeats, opt, *out);
    if (cmd == "oeis-check") {
      std::optional<int> off;
      if (offset_opt->count() > 0) off = a.offset;
      return cmd_oeis_check(a.name, a.path, off, opt, *out);
    }
    return cmd_genjiko(opt, *out);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const bell::asym::ConvergenceError& e) {
    std::cerr << "convergence failure: " << e.what() << '\n';
    return kExitVerifyFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}
