#include "internal.hpp"

#include "bell/partition.hpp"

namespace bell::cli {

namespace {

std::string groups_text(const std::vector<std::vector<int>>& groups) {
  std::string s;
  for (const auto& g : groups) {
    if (!s.empty()) s += ' ';
    s += '{';
    for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
    s += '}';
  }
  return s;
}

std::string rgs_text(const oracle::RestrictedGrowthString& r) {
  std::string s;
  for (int c : r.codes()) s += static_cast<char>('0' + c);
  return s;
}

}  // namespace

int cmd_genjiko(const Options& opt, std::ostream& out) {
  const auto patterns = oracle::genjiko_patterns();
  detail::Grid g{{"index", "rgs", "blocks", "groups"}, {}};
  for (const auto& p : patterns) {
    g.rows.push_back({p.index, rgs_text(p.rgs), static_cast<int>(p.groups.size()), groups_text(p.groups)});
  }
  if (opt.format == Format::Json) {
    detail::json arr = detail::json::array();
    for (const auto& p : patterns) {
      arr.push_back({{"index", p.index}, {"rgs", rgs_text(p.rgs)}, {"groups", p.groups}});
    }
    detail::write_json(out, {{"count", patterns.size()}, {"patterns", arr}});
    return kExitOk;
  }
  detail::emit_grid(g, opt.format, std::to_string(patterns.size()) + " patterns", "patterns", {}, out);
  return kExitOk;
}

}  // namespace bell::cli
