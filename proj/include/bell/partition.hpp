#pragma once

// Brute-force set partitions of {1..n} as restricted growth strings.

#include "bell/arb.hpp"
#include "bell/exact.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

namespace bell::oracle {

inline constexpr int kEnumerateCap = 13;
inline constexpr int kStatsCap = 12;

// codes[i] is the block of element i+1; codes[0] == 0 and each code is at
// most one more than the maximum before it.
class RestrictedGrowthString {
 public:
  RestrictedGrowthString() = default;
  explicit RestrictedGrowthString(std::vector<int> codes);  // validates

  std::span<const int> codes() const { return codes_; }
  int size() const { return static_cast<int>(codes_.size()); }
  int block_count() const;
  // Blocks of 1-based elements, in order of their smallest element.
  std::vector<std::vector<int>> blocks() const;

 private:
  friend std::uint64_t enumerate_partitions(int, const std::function<void(const RestrictedGrowthString&)>&);
  std::vector<int> codes_;
};

// Visits every set partition of {1..n} once, in lexicographic RGS order.
// Returns the visit count. 1 <= n <= kEnumerateCap.
std::uint64_t enumerate_partitions(int n, const std::function<void(const RestrictedGrowthString&)>& visitor);

struct PartitionStats {
  int n = 0;
  ArbInt total;
  ArbInt no_singleton_total;
  std::map<exact::PartitionShape, ArbInt> by_shape;
  std::vector<ArbInt> block_of_element1_size_hist;  // index k = 0..n (k = 0 always empty)
  std::vector<ArbInt> singleton_count_hist;         // index k = 0..n
};

// 1 <= n <= kStatsCap.
PartitionStats collect_stats(int n);

struct GenjikoPattern {
  int index = 0;  // 1..52
  RestrictedGrowthString rgs;
  std::vector<std::vector<int>> groups;  // incense positions 1..5 sharing a fragrance
};

// The 52 partitions of five incenses, in RGS order.
std::vector<GenjikoPattern> genjiko_patterns();

}  // namespace bell::oracle
