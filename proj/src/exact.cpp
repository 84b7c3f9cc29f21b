#include "bell/exact.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace bell::exact {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

ArbInt abs_of(const ArbInt& x) { return x < 0 ? ArbInt(-x) : x; }

// One step of the b-table: row n-1 -> row n. Tracks the widest operand.
std::vector<ArbInt> next_b_row(const std::vector<ArbInt>& prev, int n, std::size_t& max_bits) {
  std::vector<ArbInt> row(static_cast<std::size_t>(n));
  ArbInt first = 0;
  for (const auto& v : prev) first += v;
  row[0] = first;
  max_bits = std::max(max_bits, bit_length(first));
  ArbInt product;
  for (int k = 2; k <= n; ++k) {
    product = prev[static_cast<std::size_t>(k - 2)] * (n - 1);
    max_bits = std::max(max_bits, bit_length(product));
    if (!mpz_divisible_ui_p(product.get_mpz_t(), static_cast<unsigned long>(k - 1))) {
      throw std::logic_error("b-table: inexact division at (" + std::to_string(n) + "," +
                             std::to_string(k) + ")");
    }
    mpz_divexact_ui(row[static_cast<std::size_t>(k - 1)].get_mpz_t(), product.get_mpz_t(),
                    static_cast<unsigned long>(k - 1));
  }
  return row;
}

}  // namespace

TriangleTable stirling_signed_rows(int N) {
  require(N >= 1, "stirling_signed_rows: N must be >= 1");
  std::vector<std::vector<ArbInt>> rows;
  rows.reserve(static_cast<std::size_t>(N));
  rows.push_back({ArbInt(1)});
  for (int n = 2; n <= N; ++n) {
    const auto& prev = rows.back();  // row n-1, k = 1..n-1
    std::vector<ArbInt> row(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
      ArbInt v = 0;
      if (k >= 2) v += prev[static_cast<std::size_t>(k - 2)];
      if (k <= n - 1) v -= prev[static_cast<std::size_t>(k - 1)] * (n - 1);
      row[static_cast<std::size_t>(k - 1)] = std::move(v);
    }
    rows.push_back(std::move(row));
  }
  return TriangleTable("stirling", 1, 1, std::move(rows));
}

TriangleTable b_table(int N) {
  require(N >= 1, "b_table: N must be >= 1");
  std::vector<std::vector<ArbInt>> rows;
  rows.push_back({ArbInt(1)});  // b(1,1) = B_0
  std::size_t ignored = 0;
  for (int n = 2; n <= N; ++n) rows.push_back(next_b_row(rows.back(), n, ignored));
  return TriangleTable("b-table", 1, 1, std::move(rows));
}

std::vector<ArbInt> bell_numbers(int N) {
  require(N >= 0, "bell_numbers: N must be >= 0");
  std::vector<ArbInt> out{ArbInt(1)};
  if (N == 0) return out;
  const auto table = b_table(N);
  for (int n = 1; n <= N; ++n) out.push_back(table.row_sum(n));
  return out;
}

std::vector<ArbInt> beta_numbers(int N) {
  require(N >= 0, "beta_numbers: N must be >= 0");
  std::vector<ArbInt> beta{ArbInt(1)};
  if (N >= 1) beta.emplace_back(0);
  for (int n = 1; n + 1 <= N; ++n) {
    ArbInt next = 0;
    for (int j = 0; j <= n - 1; ++j) {
      next += binomial(static_cast<unsigned>(n), static_cast<unsigned>(j)) * beta[static_cast<std::size_t>(j)];
    }
    beta.push_back(std::move(next));
  }
  return beta;
}

ArbInt beta_from_bells(int n, std::span<const ArbInt> bells) {
  require(n >= 0, "beta_from_bells: n must be >= 0");
  if (bells.size() < static_cast<std::size_t>(n)) {
    throw std::invalid_argument("beta_from_bells: need B_0..B_{n-1}");
  }
  ArbInt acc = (n % 2 == 0) ? 1 : -1;
  for (int j = 0; j < n; ++j) {
    if ((n - 1 - j) % 2 == 0) {
      acc += bells[static_cast<std::size_t>(j)];
    } else {
      acc -= bells[static_cast<std::size_t>(j)];
    }
  }
  return acc;
}

TriangleTable matsunaga_rows(int N) {
  require(N >= 1, "matsunaga_rows: N must be >= 1");
  const auto s = stirling_signed_rows(N);
  const auto beta = beta_numbers(N);
  std::vector<std::vector<ArbInt>> rows;
  rows.push_back({ArbInt(0)});  // M(1,1) = 0 by the n <= 1 boundary
  for (int n = 2; n <= N; ++n) {
    const auto& prev = rows.back();
    std::vector<ArbInt> row(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
      ArbInt v = beta[static_cast<std::size_t>(n)] * s.at(n, k);
      if (k <= n - 1) v += prev[static_cast<std::size_t>(k - 1)] * n;
      row[static_cast<std::size_t>(k - 1)] = std::move(v);
    }
    rows.push_back(std::move(row));
  }
  return TriangleTable("matsunaga", 1, 1, std::move(rows));
}

ArbInt matsunaga_via_sum(int n, int k) {
  if (n < 1 || k < 1 || k > n) {
    throw std::out_of_range("matsunaga_via_sum: (" + std::to_string(n) + "," + std::to_string(k) +
                            ") outside 1 <= k <= n");
  }
  const auto s = stirling_signed_rows(n);
  const auto beta = beta_numbers(n);
  // n!/j! accumulated downward from j = n.
  ArbInt ratio = 1;
  ArbInt sum = 0;
  for (int j = n; j >= k; --j) {
    sum += ratio * beta[static_cast<std::size_t>(j)] * s.at(j, k);
    ratio *= j;
  }
  return sum;
}

HornerTrace bell_matsunaga(int n) {
  if (n < 2) throw std::invalid_argument("bell_matsunaga: n must be >= 2");
  const auto m = matsunaga_rows(n);
  HornerTrace t;
  t.n = n;
  ArbInt acc = m.at(n, n);
  t.max_bits = bit_length(acc);
  ArbInt scaled;
  for (int k = n - 1; k >= 1; --k) {
    scaled = acc * n;
    t.max_bits = std::max(t.max_bits, bit_length(scaled));
    acc = m.at(n, k) + scaled;
    t.max_bits = std::max(t.max_bits, bit_length(acc));
    t.partial_values.push_back(acc);
  }
  t.inner_sum = acc * n;
  t.max_bits = std::max(t.max_bits, bit_length(t.inner_sum));
  const ArbInt nf = factorial(static_cast<unsigned>(n));
  if (!mpz_divisible_p(t.inner_sum.get_mpz_t(), nf.get_mpz_t())) {
    throw std::logic_error("bell_matsunaga: inner sum not divisible by n!");
  }
  ArbInt q;
  mpz_divexact(q.get_mpz_t(), t.inner_sum.get_mpz_t(), nf.get_mpz_t());
  t.result = q + 1;
  return t;
}

ArimaTrace bell_arima(int n) {
  require(n >= 0, "bell_arima: n must be >= 0");
  ArimaTrace t;
  t.n = n;
  t.result = 1;
  t.max_bits = 1;
  if (n == 0) return t;
  std::vector<ArbInt> row{ArbInt(1)};
  for (int m = 2; m <= n; ++m) row = next_b_row(row, m, t.max_bits);
  ArbInt total = 0;
  for (const auto& v : row) total += v;
  t.max_bits = std::max(t.max_bits, bit_length(total));
  t.result = std::move(total);
  return t;
}

TriangleTable weighted_matsunaga_rows(int N) {
  require(N >= 2, "weighted_matsunaga_rows: N must be >= 2");
  const auto m = matsunaga_rows(N);
  std::vector<std::vector<ArbInt>> rows;
  for (int n = 2; n <= N; ++n) {
    std::vector<ArbInt> row;
    ArbInt power = 1;
    for (int k = 1; k <= n; ++k) {
      power *= n;
      row.push_back(m.at(n, k) * power);
    }
    rows.push_back(std::move(row));
  }
  return TriangleTable("weighted-matsunaga", 2, 1, std::move(rows));
}

std::vector<ArbInt> abs_matsunaga_row(int n) {
  require(n >= 1, "abs_matsunaga_row: n must be >= 1");
  const auto s = stirling_signed_rows(n);
  const auto beta = beta_numbers(n);
  std::vector<ArbInt> out;
  for (int k = 1; k <= n; ++k) {
    ArbInt ratio = 1;  // n!/j!
    ArbInt sum = 0;
    for (int j = n; j >= k; --j) {
      ArbInt term = ratio * beta[static_cast<std::size_t>(j)] * abs_of(s.at(j, k));
      if ((n - j) % 2 == 0) {
        sum += term;
      } else {
        sum -= term;
      }
      ratio *= j;
    }
    out.push_back(std::move(sum));
  }
  return out;
}

ArbRat generalized_binomial(const ArbRat& x, int m) {
  require(m >= 0, "generalized_binomial: m must be >= 0");
  ArbRat r = 1;
  for (int i = 0; i < m; ++i) r *= (x - i);
  r /= ArbRat(factorial(static_cast<unsigned>(m)));
  return r;
}

ArbRat pnv_eval(int n, const ArbRat& v) {
  require(n >= 1, "pnv_eval: n must be >= 1");
  const auto m = matsunaga_rows(n);
  ArbRat sum = 0;
  ArbRat power = 1;
  for (int k = 1; k <= n; ++k) {
    power *= v;
    sum += ArbRat(abs_of(m.at(n, k))) * power;
  }
  return sum;
}

ArbRat pnv_closed(int n, const ArbRat& v) {
  if (n < 4) throw std::invalid_argument("pnv_closed: closed form needs n >= 4");
  const auto beta = beta_numbers(n);
  ArbRat sum = 0;
  for (int j = 0; j <= n - 2; ++j) {
    ArbRat term = generalized_binomial(v + (n - j - 1), n - j) * ArbRat(beta[static_cast<std::size_t>(n - j)]);
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum * ArbRat(factorial(static_cast<unsigned>(n)));
}

PnAtN pn_at_n(int N) {
  require(N >= 1, "pn_at_n: N must be >= 1");
  PnAtN out;
  const auto beta = beta_numbers(N);
  for (int n = 1; n <= N; ++n) {
    const ArbInt nf = factorial(static_cast<unsigned>(n));
    ArbInt normalized;
    if (n < 4) {
      const ArbRat direct = pnv_eval(n, ArbRat(n)) / ArbRat(nf);
      if (direct.get_den() != 1) throw std::logic_error("pn_at_n: P_n(n)/n! not integral");
      normalized = direct.get_num();
    } else {
      normalized = 0;
      for (int j = 0; j < n; ++j) {
        ArbInt term = binomial(static_cast<unsigned>(2 * n - 1 - j), static_cast<unsigned>(n - 1)) *
                      beta[static_cast<std::size_t>(n - j)];
        if (j % 2 == 0) {
          normalized += term;
        } else {
          normalized -= term;
        }
      }
    }
    out.values.push_back(normalized * nf);
    out.normalized.push_back(std::move(normalized));
  }
  return out;
}

PartitionShape::PartitionShape(std::map<int, int> multiplicities) : mult_(std::move(multiplicities)) {
  for (const auto& [size, count] : mult_) {
    if (size < 1 || count < 1) {
      throw std::invalid_argument("PartitionShape: sizes and counts must be >= 1");
    }
  }
}

int PartitionShape::n() const {
  int total = 0;
  for (const auto& [size, count] : mult_) total += size * count;
  return total;
}

int PartitionShape::count(int size) const {
  const auto it = mult_.find(size);
  return it == mult_.end() ? 0 : it->second;
}

int PartitionShape::blocks() const {
  int total = 0;
  for (const auto& [size, count] : mult_) total += count;
  return total;
}

std::string PartitionShape::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [size, count] : mult_) {
    if (!first) os << ',';
    os << size << ':' << count;
    first = false;
  }
  os << '}';
  return os.str();
}

PartitionShape parse_shape(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '{') body.erase(body.begin());
  if (!body.empty() && body.back() == '}') body.pop_back();
  std::map<int, int> mult;
  std::istringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad shape item: " + item);
    const int size = std::stoi(item.substr(0, colon));
    const int count = std::stoi(item.substr(colon + 1));
    if (mult.contains(size)) throw std::invalid_argument("repeated block size in shape: " + item);
    mult[size] = count;
  }
  return PartitionShape(std::move(mult));
}

std::vector<PartitionShape> shapes_of(int n) {
  require(n >= 0, "shapes_of: n must be >= 0");
  std::vector<PartitionShape> out;
  std::map<int, int> current;
  // Parts chosen in nonincreasing order.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      ++current[part];
      rec(remaining - part, part);
      if (--current[part] == 0) current.erase(part);
    }
  };
  rec(n, n);
  return out;
}

ArbInt bell_polynomial_coefficient(const PartitionShape& shape, int n) {
  if (shape.n() != n) {
    throw std::invalid_argument("bell_polynomial_coefficient: shape " + shape.to_string() +
                                " does not partition " + std::to_string(n));
  }
  ArbInt den = 1;
  for (const auto& [size, count] : shape.multiplicities()) {
    ArbInt f = factorial(static_cast<unsigned>(size));
    ArbInt p;
    mpz_pow_ui(p.get_mpz_t(), f.get_mpz_t(), static_cast<unsigned long>(count));
    den *= p * factorial(static_cast<unsigned>(count));
  }
  ArbInt q;
  const ArbInt nf = factorial(static_cast<unsigned>(n));
  mpz_divexact(q.get_mpz_t(), nf.get_mpz_t(), den.get_mpz_t());
  return q;
}

ArbInt bell_via_shapes(int n) {
  ArbInt total = 0;
  for (const auto& shape : shapes_of(n)) total += bell_polynomial_coefficient(shape, n);
  return total;
}

ArbInt beta_via_shapes(int n) {
  ArbInt total = 0;
  for (const auto& shape : shapes_of(n)) {
    if (shape.count(1) == 0) total += bell_polynomial_coefficient(shape, n);
  }
  return total;
}

TriangleTable arima_rows(int N) {
  require(N >= 1, "arima_rows: N must be >= 1");
  const auto bells = bell_numbers(N);
  std::vector<std::vector<ArbInt>> rows;
  for (int n = 1; n <= N; ++n) {
    std::vector<ArbInt> row;
    for (int k = 0; k <= n; ++k) {
      row.push_back(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) *
                    bells[static_cast<std::size_t>(n - k)]);
    }
    rows.push_back(std::move(row));
  }
  return TriangleTable("arima", 1, 0, std::move(rows));
}

std::optional<int> solve_bell_inverse(const ArbInt& target) {
  if (target < 1) return std::nullopt;
  if (target == 1) return 0;
  std::vector<ArbInt> row{ArbInt(1)};  // b-table row 1; B_1 = 1
  std::size_t ignored = 0;
  for (int n = 2;; ++n) {
    row = next_b_row(row, n, ignored);
    ArbInt bn = 0;
    for (const auto& v : row) bn += v;
    if (bn == target) return n;
    if (bn > target) return std::nullopt;
  }
}

}  // namespace bell::exact
