#pragma once

// Subcommands behind the `bell` tool. Each writes to the given stream and
// returns the process exit code.

#include "bell/arb.hpp"
#include "bell/distributions.hpp"

#include <chrono>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bell::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInput = 3;

enum class Format { Text, Csv, Json };
Format parse_format(const std::string& name);
const char* format_name(Format f);

struct Options {
  Format format = Format::Text;
  std::optional<int> max_n;  // replaces every per-command default cap
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

// "8,20,50" or "30"; every entry a nonnegative integer.
std::vector<int> parse_ladder(const std::string& text);

// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);

int cmd_table(const std::string& sequence, int N, const Options& opt, std::ostream& out);
std::vector<std::string> table_sequences();

int cmd_verify(const std::string& suite, int N, const Options& opt, std::ostream& out);

int cmd_asym(const std::string& target, const std::vector<int>& ladder, const Options& opt, std::ostream& out);
std::vector<std::string> asym_targets();

int cmd_llt(const std::string& family, const std::vector<int>& ladder, dist::Centering centering, bool histogram,
            const Options& opt, std::ostream& out);

struct BenchRecord {
  int n = 0;
  std::string procedure;  // "matsunaga" or "arima"
  std::chrono::nanoseconds wall_time{0};
  std::size_t max_intermediate_bits = 0;
  ArbInt result;
};
inline constexpr int kBenchCapMatsunaga = 120;
inline constexpr int kBenchCapArima = 400;
// Best-of-repeats timing for both procedures at each n. Throws UsageError past the caps.
std::vector<BenchRecord> run_bench(const std::vector<int>& ns, int repeats, const Options& opt);
int cmd_bench(const std::vector<int>& ns, int repeats, const Options& opt, std::ostream& out);

struct BFileEntry {
  long index = 0;
  ArbInt value;
};
// '#' lines and blank lines are skipped; indices must strictly increase.
std::vector<BFileEntry> parse_bfile(std::istream& in);

struct OeisSequence {
  std::string name;     // artifact name, e.g. "bell"
  std::string oeis_id;  // e.g. "A000110"
  int offset = 0;       // b-file index of the first term
  // First `count` terms of the (flattened) sequence.
  std::function<std::vector<ArbInt>(std::size_t count)> terms;
};
const std::vector<OeisSequence>& oeis_registry();
const OeisSequence& find_oeis_sequence(const std::string& name_or_id);  // throws UsageError

int cmd_oeis_check(const std::string& sequence, const std::string& bfile_path, std::optional<int> offset,
                   const Options& opt, std::ostream& out);

int cmd_genjiko(const Options& opt, std::ostream& out);

}  // namespace bell::cli
