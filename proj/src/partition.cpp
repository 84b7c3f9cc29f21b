#include "bell/partition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace bell::oracle {

RestrictedGrowthString::RestrictedGrowthString(std::vector<int> codes) : codes_(std::move(codes)) {
  int running_max = -1;
  for (std::size_t i = 0; i < codes_.size(); ++i) {
    const int c = codes_[i];
    if (c < 0 || c > running_max + 1) {
      throw std::invalid_argument("not a restricted growth string at position " + std::to_string(i + 1));
    }
    running_max = std::max(running_max, c);
  }
}

int RestrictedGrowthString::block_count() const {
  if (codes_.empty()) return 0;
  return 1 + *std::max_element(codes_.begin(), codes_.end());
}

std::vector<std::vector<int>> RestrictedGrowthString::blocks() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(block_count()));
  for (std::size_t i = 0; i < codes_.size(); ++i) {
    out[static_cast<std::size_t>(codes_[i])].push_back(static_cast<int>(i) + 1);
  }
  return out;
}

std::uint64_t enumerate_partitions(int n, const std::function<void(const RestrictedGrowthString&)>& visitor) {
  if (n < 1 || n > kEnumerateCap) {
    throw std::out_of_range("enumerate_partitions: n must lie in 1.." + std::to_string(kEnumerateCap));
  }
  RestrictedGrowthString rgs;
  rgs.codes_.assign(static_cast<std::size_t>(n), 0);
  auto& a = rgs.codes_;
  // prefix_max[i] = max(a[0..i-1]); prefix_max[0] is unused.
  std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
  std::uint64_t count = 0;
  for (;;) {
    visitor(rgs);
    ++count;
    // Rightmost position that can still grow.
    int i = n - 1;
    while (i > 0 && a[static_cast<std::size_t>(i)] > prefix_max[static_cast<std::size_t>(i)]) --i;
    if (i == 0) break;
    ++a[static_cast<std::size_t>(i)];
    const int m = std::max(prefix_max[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(i)]);
    for (int j = i + 1; j < n; ++j) {
      a[static_cast<std::size_t>(j)] = 0;
      prefix_max[static_cast<std::size_t>(j)] = m;
    }
  }
  return count;
}

PartitionStats collect_stats(int n) {
  if (n < 1 || n > kStatsCap) {
    throw std::out_of_range("collect_stats: n must lie in 1.." + std::to_string(kStatsCap));
  }
  // Shapes are packed as 4-bit multiplicity nibbles for sizes 1..12.
  std::unordered_map<std::uint64_t, std::uint64_t> shape_counts;
  std::vector<std::uint64_t> first_block(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::uint64_t> singletons(static_cast<std::size_t>(n) + 1, 0);
  std::uint64_t no_singleton = 0;
  std::vector<int> sizes(static_cast<std::size_t>(n), 0);

  const auto total = enumerate_partitions(n, [&](const RestrictedGrowthString& rgs) {
    const auto codes = rgs.codes();
    const int blocks = rgs.block_count();
    std::fill_n(sizes.begin(), blocks, 0);
    for (int c : codes) ++sizes[static_cast<std::size_t>(c)];
    std::uint64_t key = 0;
    int single = 0;
    for (int b = 0; b < blocks; ++b) {
      const int sz = sizes[static_cast<std::size_t>(b)];
      key += std::uint64_t{1} << (4 * (sz - 1));
      if (sz == 1) ++single;
    }
    ++shape_counts[key];
    ++first_block[static_cast<std::size_t>(sizes[0])];
    ++singletons[static_cast<std::size_t>(single)];
    if (single == 0) ++no_singleton;
  });

  PartitionStats st;
  st.n = n;
  st.total = ArbInt(static_cast<unsigned long>(total));
  st.no_singleton_total = ArbInt(static_cast<unsigned long>(no_singleton));
  for (const auto& [key, count] : shape_counts) {
    std::map<int, int> mult;
    for (int size = 1; size <= n; ++size) {
      const int c = static_cast<int>((key >> (4 * (size - 1))) & 0xF);
      if (c > 0) mult[size] = c;
    }
    st.by_shape.emplace(exact::PartitionShape(std::move(mult)), ArbInt(static_cast<unsigned long>(count)));
  }
  for (auto c : first_block) st.block_of_element1_size_hist.emplace_back(static_cast<unsigned long>(c));
  for (auto c : singletons) st.singleton_count_hist.emplace_back(static_cast<unsigned long>(c));
  return st;
}

std::vector<GenjikoPattern> genjiko_patterns() {
  std::vector<GenjikoPattern> out;
  enumerate_partitions(5, [&](const RestrictedGrowthString& rgs) {
    GenjikoPattern p;
    p.index = static_cast<int>(out.size()) + 1;
    p.rgs = rgs;
    p.groups = rgs.blocks();
    out.push_back(std::move(p));
  });
  return out;
}

}  // namespace bell::oracle
