#include "internal.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>

namespace bell::cli {

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw UsageError("unknown format '" + name + "' (expected text, csv or json)");
}

const char* format_name(Format f) {
  switch (f) {
    case Format::Text: return "text";
    case Format::Csv: return "csv";
    case Format::Json: return "json";
  }
  return "?";
}

std::vector<int> parse_ladder(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.size() > 9) throw UsageError("bad ladder entry '" + item + "'");
    for (char c : item) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw UsageError("bad ladder entry '" + item + "'");
    }
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw UsageError("empty ladder");
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

namespace detail {

std::string fmt_double(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

void write_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

std::string cell_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  if (v.is_number_float()) {
    std::string t = fmt_double(v.get<double>());
    if (t.find_first_of(".eEn") == std::string::npos) t += ".0";
    return t;
  }
  return v.dump();
}

void emit_grid(const Grid& g, Format f, const std::string& title, const std::string& key, const json& extra,
               std::ostream& out) {
  switch (f) {
    case Format::Csv:
      for (std::size_t i = 0; i < g.header.size(); ++i) out << (i ? "," : "") << csv_field(g.header[i]);
      out << '\n';
      for (const auto& row : g.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(cell_text(row[i]));
        out << '\n';
      }
      break;
    case Format::Json: {
      json arr = json::array();
      for (const auto& row : g.rows) {
        json obj = json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[g.header[i]] = row[i];
        arr.push_back(obj);
      }
      json doc = extra.is_object() ? extra : json::object();
      doc[key] = arr;
      write_json(out, doc);
      break;
    }
    case Format::Text: {
      std::vector<std::size_t> width(g.header.size());
      for (std::size_t i = 0; i < g.header.size(); ++i) width[i] = g.header[i].size();
      std::vector<std::vector<std::string>> cells;
      for (const auto& row : g.rows) {
        auto& line = cells.emplace_back();
        for (std::size_t i = 0; i < row.size(); ++i) {
          line.push_back(cell_text(row[i]));
          width[i] = std::max(width[i], line.back().size());
        }
      }
      if (!title.empty()) out << title << '\n';
      auto put = [&](const std::vector<std::string>& line) {
        std::string s;
        for (std::size_t i = 0; i < line.size(); ++i) {
          if (i) s += "  ";
          s += line[i] + std::string(width[i] - line[i].size(), ' ');
        }
        while (!s.empty() && s.back() == ' ') s.pop_back();
        out << s << '\n';
      };
      put(g.header);
      for (const auto& line : cells) put(line);
      break;
    }
  }
}

}  // namespace detail

}  // namespace bell::cli
