#pragma once

#include "bell/cli.hpp"
#include "bell/triangle.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace bell::cli::detail {

using nlohmann::json;

// Effective cap: --max-n when given, else the command default.
inline int cap_for(const Options& opt, int default_cap) { return opt.max_n.value_or(default_cap); }

inline void require_range(int value, int lo, int hi, const std::string& what) {
  if (value < lo || value > hi) {
    throw UsageError(what + " must lie in " + std::to_string(lo) + ".." + std::to_string(hi) + " (got " +
                     std::to_string(value) + ")");
  }
}

std::string fmt_double(double x, int digits = 10);

void write_json(std::ostream& out, const json& j);

}  // namespace bell::cli::detail

namespace bell::cli::detail {

// Rectangular output shared by the report-style commands. Cells are JSON
// scalars so numbers stay numbers in JSON output.
struct Grid {
  std::vector<std::string> header;
  std::vector<std::vector<json>> rows;
};

std::string cell_text(const json& v);
// JSON form: {"<key>": [ {header: cell, ...}, ... ], extra...}
void emit_grid(const Grid& g, Format f, const std::string& title, const std::string& key, const json& extra,
               std::ostream& out);

}  // namespace bell::cli::detail
