#include "bell/cli.hpp"
#include "bell/exact.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using bell::ArbInt;
namespace cli = bell::cli;

namespace {

const std::string kData = BELL_TEST_DATA;

struct Run {
  int code = -1;
  std::string out;
};

Run run_tool(const std::string& args) {
  const std::string cmd = std::string(BELL_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::vector<std::string>> read_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      const char c = line[i];
      if (quoted) {
        if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
          cell += '"';
          ++i;
        } else if (c == '"') {
          quoted = false;
        } else {
          cell += c;
        }
      } else if (c == '"') {
        quoted = true;
      } else if (c == ',') {
        cells.push_back(cell);
        cell.clear();
      } else {
        cell += c;
      }
    }
    cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

cli::Options with(cli::Format f) {
  cli::Options o;
  o.format = f;
  return o;
}

}  // namespace

TEST(Ladder, Parse) {
  EXPECT_EQ(cli::parse_ladder("8,20,50"), (std::vector<int>{8, 20, 50}));
  EXPECT_EQ(cli::parse_ladder("30"), (std::vector<int>{30}));
  EXPECT_THROW(cli::parse_ladder(""), cli::UsageError);
  EXPECT_THROW(cli::parse_ladder("8,,9"), cli::UsageError);
  EXPECT_THROW(cli::parse_ladder("-3"), cli::UsageError);
  EXPECT_THROW(cli::parse_ladder("1e3"), cli::UsageError);
  EXPECT_THROW(cli::parse_format("xml"), cli::UsageError);
}

TEST(Csv, FieldQuoting) {
  EXPECT_EQ(cli::csv_field("plain"), "plain");
  EXPECT_EQ(cli::csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(cli::csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
}

TEST(Table, CsvRoundTrip) {
  std::ostringstream os;
  ASSERT_EQ(cli::cmd_table("matsunaga", 7, with(cli::Format::Csv), os), cli::kExitOk);
  const auto rows = read_csv(os.str());
  ASSERT_EQ(rows.front(), (std::vector<std::string>{"n", "k", "value"}));
  const auto m = bell::exact::matsunaga_rows(7);
  std::size_t seen = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const int n = std::stoi(rows[i][0]);
    const int k = std::stoi(rows[i][1]);
    EXPECT_EQ(bell::parse_int(rows[i][2]), m.at(n, k));
    ++seen;
  }
  EXPECT_EQ(seen, 28u);
}

TEST(Table, JsonAndCaps) {
  std::ostringstream os;
  ASSERT_EQ(cli::cmd_table("beta", 12, with(cli::Format::Json), os), cli::kExitOk);
  const auto doc = nlohmann::json::parse(os.str());
  EXPECT_NE(doc.dump().find("580317"), std::string::npos);
  std::ostringstream sink;
  EXPECT_THROW(cli::cmd_table("stirling", 501, {}, sink), cli::UsageError);
  cli::Options big;
  big.max_n = 600;
  EXPECT_EQ(cli::cmd_table("stirling", 501, big, sink), cli::kExitOk);
  EXPECT_THROW(cli::cmd_table("nope", 5, {}, sink), cli::UsageError);
}

TEST(Verify, AllSuitesPass) {
  std::ostringstream os;
  EXPECT_EQ(cli::cmd_verify("all", 20, {}, os), cli::kExitOk);
  EXPECT_NE(os.str().find("all checks passed"), std::string::npos);
  EXPECT_NE(os.str().find("(3,1)"), std::string::npos);
}

TEST(BFile, ParsesCommentsAndBlankLines) {
  std::ifstream in(kData + "/bell.txt");
  const auto e = cli::parse_bfile(in);
  ASSERT_EQ(e.size(), 9u);
  EXPECT_EQ(e.back().index, 8);
  EXPECT_EQ(e.back().value, 4140);
}

TEST(BFile, ReportsLineNumbers) {
  std::ifstream bad(kData + "/malformed.txt");
  try {
    cli::parse_bfile(bad);
    FAIL() << "expected ParseError";
  } catch (const cli::ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  std::ifstream unordered(kData + "/unordered.txt");
  try {
    cli::parse_bfile(unordered);
    FAIL() << "expected ParseError";
  } catch (const cli::ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  std::istringstream extra("0 1 2\n");
  EXPECT_THROW(cli::parse_bfile(extra), cli::ParseError);
}

TEST(Oeis, RegistryLookups) {
  EXPECT_EQ(cli::find_oeis_sequence("bell").oeis_id, "A000110");
  EXPECT_EQ(cli::find_oeis_sequence("a000296").name, "beta");
  EXPECT_THROW(cli::find_oeis_sequence("A999999"), cli::UsageError);
  const auto s = cli::find_oeis_sequence("stirling").terms(6);
  EXPECT_EQ(s, (std::vector<ArbInt>{1, -1, 1, 2, -3, 1}));
  const auto a = cli::find_oeis_sequence("arima").terms(6);
  EXPECT_EQ(a, (std::vector<ArbInt>{1, 1, 1, 2, 2, 1}));
}

TEST(Oeis, CheckFixtures) {
  std::ostringstream os;
  EXPECT_EQ(cli::cmd_oeis_check("beta", kData + "/beta.txt", std::nullopt, {}, os), cli::kExitOk);
  EXPECT_EQ(cli::cmd_oeis_check("A000110", kData + "/bell.txt", std::nullopt, {}, os), cli::kExitOk);
  std::ostringstream js;
  EXPECT_EQ(cli::cmd_oeis_check("bell", kData + "/bell_mismatch.txt", std::nullopt, with(cli::Format::Json), js),
            cli::kExitVerifyFailed);
  const auto doc = nlohmann::json::parse(js.str());
  EXPECT_EQ(doc["mismatch"]["index"], 5);
  EXPECT_EQ(doc["mismatch"]["computed"], "52");
  EXPECT_THROW(cli::cmd_oeis_check("bell", kData + "/bell.txt", 1, {}, os), cli::ParseError);
  EXPECT_EQ(cli::cmd_oeis_check("tilde-bell", kData + "/bell.txt", std::nullopt, {}, os), cli::kExitVerifyFailed);
}

TEST(Bench, ProceduresAgree) {
  const auto recs = cli::run_bench({8, 20}, 1, {});
  ASSERT_EQ(recs.size(), 4u);
  for (const auto& r : recs) EXPECT_EQ(r.result, bell::exact::bell_numbers(r.n).back());
  EXPECT_THROW(cli::run_bench({cli::kBenchCapMatsunaga + 1}, 1, {}), cli::UsageError);
}

TEST(Genjiko, Formats) {
  std::ostringstream os;
  ASSERT_EQ(cli::cmd_genjiko(with(cli::Format::Csv), os), cli::kExitOk);
  EXPECT_EQ(read_csv(os.str()).size(), 53u);
  std::ostringstream js;
  cli::cmd_genjiko(with(cli::Format::Json), js);
  EXPECT_TRUE(nlohmann::json::accept(js.str()));
}

TEST(Tool, ExitCodes) {
  EXPECT_EQ(run_tool("table bell 5").code, 0);
  EXPECT_EQ(run_tool("").code, 2);
  EXPECT_EQ(run_tool("table bell").code, 2);
  EXPECT_EQ(run_tool("table nope 5").code, 2);
  EXPECT_EQ(run_tool("table bell 5 --format yaml").code, 2);
  EXPECT_EQ(run_tool("oeis-check bell " + kData + "/malformed.txt").code, 3);
  EXPECT_EQ(run_tool("oeis-check bell " + kData + "/missing.txt").code, 3);
  EXPECT_EQ(run_tool("oeis-check bell " + kData + "/bell_mismatch.txt").code, 1);
  EXPECT_EQ(run_tool("oeis-check beta " + kData + "/beta.txt").code, 0);
  EXPECT_EQ(run_tool("verify identities 15").code, 0);
}

TEST(Tool, GlobalFlagsAndOutFile) {
  const std::string path = testing::TempDir() + "bell_out.csv";
  std::remove(path.c_str());
  const auto r = run_tool("--format csv --out " + path + " table beta 6");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(read_csv(ss.str()).back(), (std::vector<std::string>{"6", "41"}));
  const auto after = run_tool("table beta 6 --format json");
  EXPECT_EQ(after.code, 0);
  EXPECT_TRUE(nlohmann::json::accept(after.out));
  EXPECT_EQ(run_tool("table bell 2001").code, 2);
  EXPECT_EQ(run_tool("--max-n 2100 table bell 2001 --format csv").code, 0);
}
