#include "foldtri/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>

#include "foldtri/error.hpp"

namespace foldtri {

namespace {

// All Bareiss intermediates are minors, so a Hadamard-style bound on the
// columns bounds every value the elimination touches. Returns 0 when entries
// do not even fit an int64.
double minor_bound(const IntMatrix& m, const std::vector<std::vector<Int>>& extra_cols) {
  double bound = 1.0;
  const std::size_t rows = m.size();
  auto column_norm = [&](auto&& get) {
    double sum = 0.0;
    for (std::size_t r = 0; r < rows; ++r) {
      const Int& v = get(r);
      if (v < -(Int(1) << 62) || v > (Int(1) << 62)) return -1.0;
      double x = v.convert_to<double>();
      sum += x * x;
    }
    return std::sqrt(sum);
  };
  for (std::size_t c = 0; c < rows; ++c) {
    double norm = column_norm([&](std::size_t r) -> const Int& { return m[r][c]; });
    if (norm < 0) return 0.0;
    bound *= std::max(1.0, norm);
    if (bound > 1e18) return bound;
  }
  double col_max = 1.0;
  for (const auto& col : extra_cols) {
    double norm = column_norm([&](std::size_t r) -> const Int& { return col[r]; });
    if (norm < 0) return 0.0;
    col_max = std::max(col_max, norm);
  }
  // A minor using an extra column replaces one matrix column.
  return bound * col_max;
}

using I64Matrix = std::vector<std::vector<std::int64_t>>;

I64Matrix to_i64(const IntMatrix& m) {
  I64Matrix out(m.size());
  for (std::size_t r = 0; r < m.size(); ++r) {
    out[r].reserve(m[r].size());
    for (const Int& v : m[r]) out[r].push_back(v.convert_to<std::int64_t>());
  }
  return out;
}

struct EliminationI64 {
  int rank = 0;
  int sign = 1;
  std::int64_t last_pivot = 1;
};

EliminationI64 bareiss_forward_i64(I64Matrix& m, int rows, int cols, int pivot_cols) {
  EliminationI64 e;
  std::int64_t prev = 1;
  int row = 0;
  for (int col = 0; col < pivot_cols && row < rows; ++col) {
    int pivot = -1;
    for (int r = row; r < rows; ++r) {
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      std::swap(m[pivot], m[row]);
      e.sign = -e.sign;
    }
    for (int r = row + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c) {
        __int128 v = static_cast<__int128>(m[row][col]) * m[r][c] -
                     static_cast<__int128>(m[r][col]) * m[row][c];
        m[r][c] = static_cast<std::int64_t>(v / prev);
      }
      m[r][col] = 0;
    }
    prev = m[row][col];
    ++row;
  }
  e.rank = row;
  e.last_pivot = prev;
  return e;
}

ExactSolve solve_columns_i64(const IntMatrix& a, const std::vector<std::vector<Int>>& rhs) {
  const int n = static_cast<int>(a.size());
  const int k = static_cast<int>(rhs.size());
  I64Matrix m(n, std::vector<std::int64_t>(n + k));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m[r][c] = a[r][c].convert_to<std::int64_t>();
    for (int j = 0; j < k; ++j) m[r][n + j] = rhs[j][r].convert_to<std::int64_t>();
  }
  EliminationI64 e = bareiss_forward_i64(m, n, n + k, n);
  ExactSolve out;
  if (e.rank < n) {
    out.den = 0;
    return out;
  }
  std::int64_t den = e.sign < 0 ? -e.last_pivot : e.last_pivot;
  out.den = den;
  out.columns.assign(k, std::vector<Int>(n));
  std::vector<std::int64_t> z(n);
  for (int j = 0; j < k; ++j) {
    for (int r = n - 1; r >= 0; --r) {
      __int128 acc = static_cast<__int128>(den) * m[r][n + j];
      for (int c = r + 1; c < n; ++c) acc -= static_cast<__int128>(m[r][c]) * z[c];
      z[r] = static_cast<std::int64_t>(acc / m[r][r]);
    }
    for (int r = 0; r < n; ++r) out.columns[j][r] = z[r];
  }
  return out;
}

// Fraction-free forward elimination in place. Returns the determinant sign
// factor from row swaps and the final pivot row count; after the loop
// m[r][r] holds the r-th leading principal pivot (Bareiss invariant).
struct Elimination {
  int rank = 0;
  int sign = 1;
  Int last_pivot = 1;
};

Elimination bareiss_forward(IntMatrix& m, int rows, int cols, int pivot_cols) {
  Elimination e;
  Int prev = 1;
  int row = 0;
  for (int col = 0; col < pivot_cols && row < rows; ++col) {
    int pivot = -1;
    for (int r = row; r < rows; ++r) {
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      std::swap(m[pivot], m[row]);
      e.sign = -e.sign;
    }
    for (int r = row + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c) {
        Int v = m[row][col] * m[r][c] - m[r][col] * m[row][c];
        m[r][c] = v / prev;  // exact by the Bareiss identity
      }
      m[r][col] = 0;
    }
    prev = m[row][col];
    ++row;
  }
  e.rank = row;
  e.last_pivot = prev;
  return e;
}

}  // namespace

Int det(IntMatrix m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return Int(1);
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n) fail(Errc::invalid_argument, "determinant of a non-square matrix");
  double bound = minor_bound(m, {});
  if (bound > 0 && bound < 1e9) {
    I64Matrix small = to_i64(m);
    EliminationI64 e = bareiss_forward_i64(small, n, n, n);
    if (e.rank < n) return Int(0);
    return Int(e.sign < 0 ? -e.last_pivot : e.last_pivot);
  }
  Elimination e = bareiss_forward(m, n, n, n);
  if (e.rank < n) return Int(0);
  return e.sign < 0 ? Int(-e.last_pivot) : e.last_pivot;
}

ExactSolve solve_columns(IntMatrix a, std::vector<std::vector<Int>> rhs) {
  const int n = static_cast<int>(a.size());
  const int k = static_cast<int>(rhs.size());
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != n) fail(Errc::invalid_argument, "solve on a non-square matrix");
  for (const auto& col : rhs)
    if (static_cast<int>(col.size()) != n) fail(Errc::invalid_argument, "solve rhs of wrong length");

  double bound = minor_bound(a, rhs);
  if (bound > 0 && bound < 1e9) return solve_columns_i64(a, rhs);

  // Augment [A | rhs columns]; row operations keep every column system
  // equivalent to the original one.
  IntMatrix m(n, std::vector<Int>(n + k));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m[r][c] = std::move(a[r][c]);
    for (int j = 0; j < k; ++j) m[r][n + j] = rhs[j][r];
  }
  Elimination e = bareiss_forward(m, n, n + k, n);
  ExactSolve out;
  if (e.rank < n) {
    out.den = 0;
    return out;
  }
  Int den = e.sign < 0 ? Int(-e.last_pivot) : e.last_pivot;
  out.den = den;

  // Back substitution for z = x * den: every division is exact since z is the
  // Cramer solution scaled by det(A).
  out.columns.assign(k, std::vector<Int>(n));
  for (int j = 0; j < k; ++j) {
    std::vector<Int>& z = out.columns[j];
    for (int r = n - 1; r >= 0; --r) {
      Int acc = den * m[r][n + j];
      for (int c = r + 1; c < n; ++c) acc -= m[r][c] * z[c];
      z[r] = acc / m[r][r];
    }
  }
  return out;
}

int rank_rational(IntMatrix m) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  Elimination e = bareiss_forward(m, rows, cols, cols);
  return e.rank;
}

Gf2Matrix Gf2Matrix::from_integers(const IntMatrix& m) {
  Gf2Matrix out;
  out.cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  for (const auto& row : m) out.append_row(row);
  return out;
}

void Gf2Matrix::append_row(const std::vector<Int>& row) {
  if (cols == 0) cols = static_cast<int>(row.size());
  std::vector<std::uint64_t> bits((cols + 63) / 64, 0);
  for (int c = 0; c < cols; ++c)
    if (is_odd(row[c])) bits[c / 64] |= (std::uint64_t{1} << (c % 64));
  rows.push_back(std::move(bits));
}

namespace {

int gf2_eliminate(Gf2Matrix& m) {
  int rank = 0;
  const int rows = static_cast<int>(m.rows.size());
  for (int col = 0; col < m.cols && rank < rows; ++col) {
    const int word = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m.rows[r][word] & bit) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m.rows[pivot], m.rows[rank]);
    for (int r = 0; r < rows; ++r) {
      if (r != rank && (m.rows[r][word] & bit)) {
        for (std::size_t w = 0; w < m.rows[r].size(); ++w) m.rows[r][w] ^= m.rows[rank][w];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int rank_gf2(Gf2Matrix m) { return gf2_eliminate(m); }

bool solvable_gf2(Gf2Matrix a, const std::vector<std::uint64_t>& target_row) {
  // Rows of a are the generators; the target is reachable iff adding it as a
  // row does not raise the rank. Elimination preserves the row space.
  int base = gf2_eliminate(a);
  a.rows.push_back(target_row);
  int extended = gf2_eliminate(a);
  return extended == base;
}

std::vector<Int> elementary_divisors(IntMatrix m) {
  std::vector<Int> divisors;
  if (m.empty() || m[0].empty()) return divisors;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int offset = 0;
  while (offset < rows && offset < cols) {
    // Find a nonzero pivot in the trailing block.
    int pr = -1, pc = -1;
    for (int r = offset; r < rows && pr < 0; ++r)
      for (int c = offset; c < cols; ++c)
        if (m[r][c] != 0) {
          pr = r;
          pc = c;
          break;
        }
    if (pr < 0) break;
    std::swap(m[pr], m[offset]);
    for (int r = 0; r < rows; ++r) std::swap(m[r][pc], m[r][offset]);

    // Reduce row and column at offset until both are cleared.
    bool again = true;
    while (again) {
      again = false;
      for (int r = offset + 1; r < rows; ++r) {
        if (m[r][offset] == 0) continue;
        Int q = m[r][offset] / m[offset][offset];
        for (int c = offset; c < cols; ++c) m[r][c] -= q * m[offset][c];
        if (m[r][offset] != 0) {
          std::swap(m[r], m[offset]);
          again = true;
        }
      }
      for (int c = offset + 1; c < cols; ++c) {
        if (m[offset][c] == 0) continue;
        Int q = m[offset][c] / m[offset][offset];
        for (int r = offset; r < rows; ++r) m[r][c] -= q * m[r][offset];
        if (m[offset][c] != 0) {
          for (int r = 0; r < rows; ++r) std::swap(m[r][c], m[r][offset]);
          again = true;
        }
      }
    }
    divisors.push_back(boost::multiprecision::abs(m[offset][offset]));
    ++offset;
  }

  // Enforce the divisibility chain d_i | d_{i+1}.
  for (std::size_t i = 0; i + 1 < divisors.size(); ++i) {
    for (std::size_t j = i + 1; j < divisors.size(); ++j) {
      if (divisors[j] % divisors[i] != 0) {
        Int g = boost::multiprecision::gcd(divisors[i], divisors[j]);
        Int l = divisors[i] / g * divisors[j];
        divisors[i] = g;
        divisors[j] = l;
      }
    }
    std::sort(divisors.begin() + static_cast<long>(i), divisors.end());
  }
  return divisors;
}

}  // namespace foldtri
