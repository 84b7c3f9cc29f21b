#include "internal.hpp"

#include "bell/asymptotics.hpp"
#include "bell/distributions.hpp"
#include "bell/exact.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace bell::cli {

namespace {

using Row = std::vector<ArbInt>;
using RowFn = std::function<Row(int)>;

// Terms of a triangle read by rows n = first_row, first_row + 1, ...
std::vector<ArbInt> flatten(std::size_t count, int first_row, const RowFn& row) {
  std::vector<ArbInt> out;
  for (int n = first_row; out.size() < count; ++n) {
    for (auto& v : row(n)) {
      if (out.size() == count) break;
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<ArbInt> list_terms(std::size_t count, std::vector<ArbInt> (*gen)(int)) {
  if (count == 0) return {};
  return gen(static_cast<int>(count) - 1);
}

ArbInt abs_of(const ArbInt& x) { return x < 0 ? ArbInt(-x) : x; }

Row product_row(int from, int to, const std::function<std::pair<ArbInt, ArbInt>(int)>& factor) {
  std::vector<std::pair<ArbInt, ArbInt>> f;
  for (int j = from; j <= to; ++j) f.push_back(factor(j));
  return dist::expand_linear_product(f);
}

Row scaled_bell_row(int n, int a) {
  if (n == 0) return {ArbInt(1)};
  if (n == 1) return {ArbInt(a), ArbInt(1)};
  const auto v = a == 2 ? dist::Variant::A078937 : a == 3 ? dist::Variant::A078938 : dist::Variant::A078939;
  return dist::variant_triangle(n, v).weights();
}

Row singleton_row(int n, bool drop_last) {
  const auto beta = exact::beta_numbers(n);
  Row r;
  for (int k = 0; k <= (drop_last ? n - 1 : n); ++k) {
    r.push_back(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) * beta[static_cast<std::size_t>(n - k)]);
  }
  return r;
}

OeisSequence triangle(std::string name, std::string id, int offset, int first_row, RowFn row) {
  return {std::move(name), std::move(id), offset,
          [first_row, row = std::move(row)](std::size_t count) { return flatten(count, first_row, row); }};
}

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
  return s;
}

}  // namespace

std::vector<BFileEntry> parse_bfile(std::istream& in) {
  std::vector<BFileEntry> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ss(line);
    std::string idx, val, extra;
    ss >> idx >> val;
    if (val.empty()) throw ParseError(lineno, "expected \"index value\", got \"" + line + "\"");
    if (ss >> extra) throw ParseError(lineno, "trailing text \"" + extra + "\"");
    BFileEntry e;
    try {
      std::size_t used = 0;
      e.index = std::stol(idx, &used);
      if (used != idx.size()) throw std::invalid_argument(idx);
      e.value = parse_int(val);
    } catch (const std::exception&) {
      throw ParseError(lineno, "malformed entry \"" + line + "\"");
    }
    if (!out.empty() && e.index <= out.back().index) {
      throw ParseError(lineno, "index " + std::to_string(e.index) + " does not increase");
    }
    out.push_back(std::move(e));
  }
  return out;
}

const std::vector<OeisSequence>& oeis_registry() {
  static const std::vector<OeisSequence> reg = [] {
    std::vector<OeisSequence> r;
    r.push_back({"bell", "A000110", 0, [](std::size_t c) { return list_terms(c, exact::bell_numbers); }});
    r.push_back({"beta", "A000296", 0, [](std::size_t c) { return list_terms(c, exact::beta_numbers); }});
    r.push_back({"tilde-bell", "A001861", 0, [](std::size_t c) { return list_terms(c, asym::tilde_bell_exact); }});
    r.push_back(triangle("stirling", "A008275", 1, 1, [](int n) {
      const auto s = exact::stirling_signed_rows(n);
      const auto row = s.row(n);
      return Row(row.begin(), row.end());
    }));
    r.push_back(triangle("arima", "A056857", 1, 0, [](int n) {
      const auto b = exact::bell_numbers(n);
      Row row;
      for (int k = 0; k <= n; ++k) {
        row.push_back(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) * b[static_cast<std::size_t>(n - k)]);
      }
      return row;
    }));
    r.push_back(triangle("a033306", "A033306", 0, 0, [](int n) {
      const auto b = exact::bell_numbers(n);
      Row row;
      for (int k = 0; k <= n; ++k) {
        row.push_back(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) * b[static_cast<std::size_t>(k)] *
                      b[static_cast<std::size_t>(n - k)]);
      }
      return row;
    }));
    r.push_back(triangle("a056856", "A056856", 1, 1, [](int n) {
      const auto s = exact::stirling_signed_rows(n);
      Row row;
      ArbInt p = 1;
      for (int k = 1; k <= n; ++k) {
        row.push_back(abs_of(s.at(n, k)) * p);
        p *= n;
      }
      return row;
    }));
    r.push_back(triangle("a220883", "A220883", 1, 1, [](int n) {
      return product_row(1, n - 1, [n](int j) { return std::pair{ArbInt(j), ArbInt(n + 1)}; });
    }));
    r.push_back(triangle("a260887", "A260887", 1, 1, [](int n) {
      return product_row(2, n, [n](int j) { return std::pair{ArbInt(j), ArbInt(n)}; });
    }));
    r.push_back(triangle("a220884", "A220884", 1, 1, [](int n) {
      return product_row(2, n, [n](int j) { return std::pair{ArbInt(j), ArbInt(n + 1 - j)}; });
    }));
    r.push_back(triangle("a078937", "A078937", 0, 0, [](int n) { return scaled_bell_row(n, 2); }));
    r.push_back(triangle("a078938", "A078938", 0, 0, [](int n) { return scaled_bell_row(n, 3); }));
    r.push_back(triangle("a078939", "A078939", 0, 0, [](int n) { return scaled_bell_row(n, 4); }));
    r.push_back(triangle("a124323", "A124323", 0, 0, [](int n) { return singleton_row(n, false); }));
    r.push_back(triangle("a086659", "A086659", 1, 1, [](int n) { return singleton_row(n, true); }));
    return r;
  }();
  return reg;
}

const OeisSequence& find_oeis_sequence(const std::string& name_or_id) {
  for (const auto& s : oeis_registry()) {
    if (s.name == name_or_id || s.oeis_id == upper(name_or_id)) return s;
  }
  throw UsageError("unknown OEIS sequence '" + name_or_id + "'");
}

int cmd_oeis_check(const std::string& sequence, const std::string& bfile_path, std::optional<int> offset,
                   const Options& opt, std::ostream& out) {
  const OeisSequence& seq = find_oeis_sequence(sequence);
  std::ifstream in(bfile_path);
  if (!in) throw ParseError(0, "cannot open " + bfile_path);
  const auto entries = parse_bfile(in);
  const int off = offset.value_or(seq.offset);
  const std::size_t cap = static_cast<std::size_t>(detail::cap_for(opt, 1000));

  std::size_t needed = 0;
  std::size_t compared = 0;
  for (const auto& e : entries) {
    if (e.index < off) throw ParseError(0, "index " + std::to_string(e.index) + " precedes the sequence offset " +
                                               std::to_string(off));
    const auto pos = static_cast<std::size_t>(e.index - off);
    if (pos >= cap) break;
    needed = std::max(needed, pos + 1);
    ++compared;
  }
  const auto terms = seq.terms(needed);

  std::optional<std::size_t> bad;
  for (std::size_t i = 0; i < compared; ++i) {
    if (terms[static_cast<std::size_t>(entries[i].index - off)] != entries[i].value) {
      bad = i;
      break;
    }
  }
  const bool ok = !bad.has_value();
  detail::json doc = {{"sequence", seq.name},   {"oeis", seq.oeis_id},   {"offset", off},
                      {"entries", entries.size()}, {"compared", compared}, {"match", ok}};
  if (bad) {
    const auto& e = entries[*bad];
    doc["mismatch"] = {{"index", e.index},
                       {"bfile", to_string(e.value)},
                       {"computed", to_string(terms[static_cast<std::size_t>(e.index - off)])}};
  }
  switch (opt.format) {
    case Format::Json: detail::write_json(out, doc); break;
    case Format::Csv:
      out << "sequence,oeis,offset,entries,compared,match,mismatch_index,bfile_value,computed_value\n";
      out << seq.name << ',' << seq.oeis_id << ',' << off << ',' << entries.size() << ',' << compared << ','
          << (ok ? "true" : "false") << ',';
      if (bad) {
        out << doc["mismatch"]["index"].dump() << ',' << doc["mismatch"]["bfile"].get<std::string>() << ','
            << doc["mismatch"]["computed"].get<std::string>();
      } else {
        out << ",,";
      }
      out << '\n';
      break;
    case Format::Text:
      out << seq.oeis_id << " (" << seq.name << ", offset " << off << "): ";
      if (ok) {
        out << "full match, " << compared << " entries compared";
        if (compared < entries.size()) out << " (stopped at cap, " << entries.size() - compared << " not compared)";
        out << '\n';
      } else {
        out << "first mismatch at index " << doc["mismatch"]["index"].dump() << ": b-file "
            << doc["mismatch"]["bfile"].get<std::string>() << ", computed "
            << doc["mismatch"]["computed"].get<std::string>() << '\n';
      }
      break;
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace bell::cli
