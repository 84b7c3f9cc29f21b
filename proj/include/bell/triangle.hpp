#pragma once

#include "bell/arb.hpp"

#include <span>
#include <string>
#include <vector>

namespace bell {

// Lower-triangular (n,k) table. Row n holds k = k_min..n; rows run
// n = n_first..n_last. Any access outside the stored triangle throws
// std::out_of_range; boundary zeros belong to whoever builds the rows.
class TriangleTable {
 public:
  TriangleTable(std::string name, int n_first, int k_min, std::vector<std::vector<ArbInt>> rows);

  const std::string& name() const { return name_; }
  int n_first() const { return n_first_; }
  int n_last() const { return n_first_ + static_cast<int>(rows_.size()) - 1; }
  int k_min() const { return k_min_; }
  bool empty() const { return rows_.empty(); }

  bool contains(int n, int k) const {
    return n >= n_first_ && n <= n_last() && k >= k_min_ && k <= n;
  }

  const ArbInt& at(int n, int k) const;
  std::span<const ArbInt> row(int n) const;
  ArbInt row_sum(int n) const;

  friend bool operator==(const TriangleTable&, const TriangleTable&) = default;

 private:
  std::string name_;
  int n_first_;
  int k_min_;
  std::vector<std::vector<ArbInt>> rows_;
};

}  // namespace bell
