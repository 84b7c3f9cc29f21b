#include "bell/triangle.hpp"

#include <stdexcept>

namespace bell {

TriangleTable::TriangleTable(std::string name, int n_first, int k_min,
                             std::vector<std::vector<ArbInt>> rows)
    : name_(std::move(name)), n_first_(n_first), k_min_(k_min), rows_(std::move(rows)) {
  if (k_min_ < 0 || n_first_ < k_min_) {
    throw std::invalid_argument("TriangleTable " + name_ + ": need 0 <= k_min <= n_first");
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const int n = n_first_ + static_cast<int>(i);
    if (rows_[i].size() != static_cast<std::size_t>(n - k_min_ + 1)) {
      throw std::invalid_argument("TriangleTable " + name_ + ": row " + std::to_string(n) +
                                  " has wrong length");
    }
  }
}

const ArbInt& TriangleTable::at(int n, int k) const {
  if (!contains(n, k)) {
    throw std::out_of_range("TriangleTable " + name_ + ": (" + std::to_string(n) + "," +
                            std::to_string(k) + ") outside the triangle");
  }
  return rows_[static_cast<std::size_t>(n - n_first_)][static_cast<std::size_t>(k - k_min_)];
}

std::span<const ArbInt> TriangleTable::row(int n) const {
  if (n < n_first_ || n > n_last()) {
    throw std::out_of_range("TriangleTable " + name_ + ": no row " + std::to_string(n));
  }
  return rows_[static_cast<std::size_t>(n - n_first_)];
}

ArbInt TriangleTable::row_sum(int n) const {
  ArbInt s = 0;
  for (const auto& v : row(n)) s += v;
  return s;
}

}  // namespace bell
