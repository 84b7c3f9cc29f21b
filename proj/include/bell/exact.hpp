#pragma once

// Exact sequences and triangles around the two eighteenth-century Bell
// number procedures: the Stirling-number pipeline through the Matsunaga
// numbers M(n,k), and the binomial recurrence with its b(n,k) table.

#include "bell/arb.hpp"
#include "bell/triangle.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bell::exact {

// Signed Stirling numbers of the first kind s(n,k), 1 <= k <= n <= N,
// built by s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k).
TriangleTable stirling_signed_rows(int N);

// b(n,k) = C(n-1,k-1) B(n-k) for 1 <= k <= n <= N, filled row by row with
//   b(n,1) = sum_j b(n-1,j),  b(n,k) = (n-1) b(n-1,k-1) / (k-1).
// The division is checked for exactness.
TriangleTable b_table(int N);

// B_0..B_N as row sums of the b-table.
std::vector<ArbInt> bell_numbers(int N);

// Set partitions without singleton blocks, beta_0..beta_N, from
// beta_{n+1} = sum_{0<=j<=n-1} C(n,j) beta_j with beta_0 = 1, beta_1 = 0.
std::vector<ArbInt> beta_numbers(int N);

// beta_n = sum_{0<=j<n} (-1)^(n-1-j) B_j + (-1)^n. Needs B_0..B_{n-1}.
ArbInt beta_from_bells(int n, std::span<const ArbInt> bells);

// M(n,k) = n M(n-1,k) + beta_n s(n,k), zero for n <= 1. Rows n = 1..N.
TriangleTable matsunaga_rows(int N);

// M(n,k) = n! sum_{k<=j<=n} (beta_j / j!) s(j,k), evaluated independently of
// the recurrence.
ArbInt matsunaga_via_sum(int n, int k);

// Record of Matsunaga's Horner evaluation of sum_k M(n,k) n^k.
struct HornerTrace {
  int n = 0;
  // Accumulator after each nesting step, innermost first:
  // M(n,n-1) + n M(n,n), then M(n,n-2) + n(...), ..., down to k = 1.
  std::vector<ArbInt> partial_values;
  ArbInt inner_sum;  // n * partial_values.back() = sum_k M(n,k) n^k
  std::size_t max_bits = 0;
  ArbInt result;  // B_n = 1 + inner_sum / n!
};

// Matsunaga's procedure for B_n, n >= 2.
HornerTrace bell_matsunaga(int n);

// Arima's procedure for B_n via the b-table, with the largest operand seen.
struct ArimaTrace {
  int n = 0;
  std::size_t max_bits = 0;
  ArbInt result;
};
ArimaTrace bell_arima(int n);

// M(n,k) n^k, rows n = 2..N.
TriangleTable weighted_matsunaga_rows(int N);

// n! sum_{k<=j<=n} (-1)^(n-j) (beta_j / j!) |s(j,k)| for k = 1..n. Equals
// |M(n,k)| except at (3,1), where it evaluates to -1.
std::vector<ArbInt> abs_matsunaga_row(int n);

// Generalized binomial C(x, m) = x (x-1) ... (x-m+1) / m!.
ArbRat generalized_binomial(const ArbRat& x, int m);

// P_n(v) = sum_k |M(n,k)| v^k by direct summation (n >= 1).
ArbRat pnv_eval(int n, const ArbRat& v);

// P_n(v) = n! sum_{0<=j<=n-2} C(v+n-j-1, n-j) (-1)^j beta_{n-j}; n >= 4 only.
ArbRat pnv_closed(int n, const ArbRat& v);

struct PnAtN {
  std::vector<ArbInt> values;      // P_n(n) for n = 1..N (index n-1)
  std::vector<ArbInt> normalized;  // P_n(n) / n!
};
PnAtN pn_at_n(int N);

// Block-size multiset of a set partition: size -> number of blocks.
class PartitionShape {
 public:
  PartitionShape() = default;
  explicit PartitionShape(std::map<int, int> multiplicities);

  const std::map<int, int>& multiplicities() const { return mult_; }
  int n() const;
  int count(int size) const;
  int blocks() const;
  std::string to_string() const;  // "{1:1,2:2}"

  auto operator<=>(const PartitionShape&) const = default;

 private:
  std::map<int, int> mult_;
};

// Parses "{1:1,2:2}" or "1:1,2:2".
PartitionShape parse_shape(const std::string& text);

// All integer partitions of n as shapes.
std::vector<PartitionShape> shapes_of(int n);

// n! / prod_i (i!^{k_i} k_i!); throws if shape does not describe n.
ArbInt bell_polynomial_coefficient(const PartitionShape& shape, int n);
inline ArbInt bell_polynomial_coefficient(const PartitionShape& shape) {
  return bell_polynomial_coefficient(shape, shape.n());
}
ArbInt bell_via_shapes(int n);
ArbInt beta_via_shapes(int n);  // shapes with no singleton blocks

// A(n,k) = C(n,k) B(n-k), rows n = 1..N, k = 0..n.
TriangleTable arima_rows(int N);

// Smallest n with B_n == target, or nullopt once B_n exceeds it.
std::optional<int> solve_bell_inverse(const ArbInt& target);

}  // namespace bell::exact
