#include "internal.hpp"

#include "bell/exact.hpp"

#include <map>

namespace bell::cli {

namespace {

using detail::json;

struct TableSpec {
  int min_n;
  int cap;
  bool triangle;
};

const std::map<std::string, TableSpec>& specs() {
  static const std::map<std::string, TableSpec> m{
      {"stirling", {1, 500, true}},       {"matsunaga", {1, 300, true}}, {"weighted-matsunaga", {2, 200, true}},
      {"arima", {1, 500, true}},          {"b-table", {1, 500, true}},   {"bell", {0, 2000, false}},
      {"beta", {0, 2000, false}},         {"pn-at-n", {1, 300, false}},  {"pn-at-n-normalized", {1, 300, false}},
  };
  return m;
}

void emit_triangle(const TriangleTable& t, const std::string& name, Format f, std::ostream& out) {
  switch (f) {
    case Format::Csv:
      out << "n,k,value\n";
      for (int n = t.n_first(); n <= t.n_last(); ++n) {
        int k = t.k_min();
        for (const auto& v : t.row(n)) out << n << ',' << k++ << ',' << to_string(v) << '\n';
      }
      break;
    case Format::Json: {
      json rows = json::array();
      for (int n = t.n_first(); n <= t.n_last(); ++n) {
        json vals = json::array();
        for (const auto& v : t.row(n)) vals.push_back(to_string(v));
        rows.push_back({{"n", n}, {"values", vals}});
      }
      detail::write_json(out, {{"sequence", name}, {"k_min", t.k_min()}, {"rows", rows}});
      break;
    }
    case Format::Text:
      out << name << " (n = " << t.n_first() << ".." << t.n_last() << ", k from " << t.k_min() << ")\n";
      for (int n = t.n_first(); n <= t.n_last(); ++n) {
        out << n << ':';
        for (const auto& v : t.row(n)) out << ' ' << to_string(v);
        out << '\n';
      }
      break;
  }
}

void emit_list(const std::vector<ArbInt>& values, int first, const std::string& name, Format f, std::ostream& out) {
  switch (f) {
    case Format::Csv:
      out << "n,value\n";
      for (std::size_t i = 0; i < values.size(); ++i) out << first + static_cast<int>(i) << ',' << to_string(values[i]) << '\n';
      break;
    case Format::Json: {
      json vals = json::array();
      for (std::size_t i = 0; i < values.size(); ++i) {
        vals.push_back({{"n", first + static_cast<int>(i)}, {"value", to_string(values[i])}});
      }
      detail::write_json(out, {{"sequence", name}, {"values", vals}});
      break;
    }
    case Format::Text:
      out << name << '\n';
      for (std::size_t i = 0; i < values.size(); ++i) out << first + static_cast<int>(i) << ": " << to_string(values[i]) << '\n';
      break;
  }
}

}  // namespace

std::vector<std::string> table_sequences() {
  std::vector<std::string> out;
  for (const auto& [name, spec] : specs()) out.push_back(name);
  return out;
}

int cmd_table(const std::string& sequence, int N, const Options& opt, std::ostream& out) {
  const auto it = specs().find(sequence);
  if (it == specs().end()) throw UsageError("unknown sequence '" + sequence + "'");
  const TableSpec& spec = it->second;
  detail::require_range(N, spec.min_n, detail::cap_for(opt, spec.cap), "N for " + sequence);

  if (sequence == "stirling") emit_triangle(exact::stirling_signed_rows(N), sequence, opt.format, out);
  else if (sequence == "matsunaga") emit_triangle(exact::matsunaga_rows(N), sequence, opt.format, out);
  else if (sequence == "weighted-matsunaga") emit_triangle(exact::weighted_matsunaga_rows(N), sequence, opt.format, out);
  else if (sequence == "arima") emit_triangle(exact::arima_rows(N), sequence, opt.format, out);
  else if (sequence == "b-table") emit_triangle(exact::b_table(N), sequence, opt.format, out);
  else if (sequence == "bell") emit_list(exact::bell_numbers(N), 0, sequence, opt.format, out);
  else if (sequence == "beta") emit_list(exact::beta_numbers(N), 0, sequence, opt.format, out);
  else {
    auto p = exact::pn_at_n(N);
    emit_list(sequence == "pn-at-n" ? p.values : p.normalized, 1, sequence, opt.format, out);
  }
  return kExitOk;
}

}  // namespace bell::cli
