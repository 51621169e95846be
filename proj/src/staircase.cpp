#include "foldtri/staircase.hpp"

#include <algorithm>
#include <map>

#include "foldtri/error.hpp"

namespace foldtri {

std::vector<Shuffle> all_shuffles(int m, int n) {
  if (m < 0 || n < 0) fail(Errc::invalid_argument, "shuffle sizes must be nonnegative");
  std::vector<std::uint8_t> bits(m + n, 0);
  std::fill(bits.begin(), bits.begin() + n, std::uint8_t{0});
  std::fill(bits.begin() + n, bits.end(), std::uint8_t{1});
  std::sort(bits.begin(), bits.end());
  std::vector<Shuffle> out;
  do {
    out.push_back(Shuffle{bits});
  } while (std::next_permutation(bits.begin(), bits.end()));
  return out;
}

SVector shuffle_to_svector(const Shuffle& shuffle, int m, int n) {
  if (static_cast<int>(shuffle.bits.size()) != m + n)
    fail(Errc::malformed_shuffle, "expected " + std::to_string(m + n) + " moves, got " +
                                      std::to_string(shuffle.bits.size()));
  SVector out;
  int ones = 0;
  for (int pos = 0; pos < m + n; ++pos) {
    const std::uint8_t b = shuffle.bits[pos];
    if (b != 0 && b != 1) fail(Errc::malformed_shuffle, "bits must be 0 or 1");
    if (b == 1) {
      ++ones;
      out.s.push_back(pos + 1 - ones);  // shifts of the `ones`-th one
    }
  }
  if (ones != m)
    fail(Errc::malformed_shuffle,
         "expected " + std::to_string(m) + " ones, got " + std::to_string(ones));
  return out;
}

long long lexrev_position(int n, int i, int j) {
  return static_cast<long long>(n + 1) * i + (n - j);
}

Triangulation staircase(int m, int n) {
  if (m < 0 || n < 0) fail(Errc::invalid_argument, "staircase needs m, n >= 0");
  PointConfiguration config = product_configuration(simplex_config(m), simplex_config(n));
  auto index = [n](int i, int j) { return i * (n + 1) + j; };

  std::vector<std::vector<int>> facets;
  for (const Shuffle& shuffle : all_shuffles(m, n)) {
    std::vector<int> facet;
    facet.reserve(m + n + 1);
    int i = 0, j = 0;
    facet.push_back(index(i, j));
    for (std::uint8_t b : shuffle.bits) {
      if (b == 1)
        ++i;  // right: advance in the first factor
      else
        ++j;  // up: advance in the second factor
      facet.push_back(index(i, j));
    }
    facets.push_back(std::move(facet));
  }

  std::vector<int> coloring(config.points.size());
  TwoLevelLifting lifting;
  lifting.values.resize(config.points.size());
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= n; ++j) {
      coloring[index(i, j)] = i + j;
      lifting.values[index(i, j)] = {Rat(pow2(lexrev_position(n, i, j))), Rat(0)};
    }
  }
  return make_triangulation(std::move(config), std::move(facets), std::move(coloring),
                            std::move(lifting));
}

Int staircase_signature(int m, int n) {
  if (m < 0 || n < 0) fail(Errc::invalid_argument, "signature needs m, n >= 0");
  if (m == 0 || n == 0) return Int(1);
  const bool m_odd = (m % 2) != 0;
  const bool n_odd = (n % 2) != 0;
  if (m_odd && n_odd) return Int(0);
  if (!m_odd) {
    int k = m / 2;
    int l = n / 2;  // floor covers both 2l and 2l+1
    return binomial(k + l, k);
  }
  // m odd, n even: use the transposed product.
  int k = n / 2;
  int l = m / 2;
  return binomial(k + l, k);
}

namespace {

Int recursive_memo(int m, int n, std::map<std::pair<int, int>, Int>& memo) {
  if (m == 0 || n == 0) return Int(1);
  auto key = std::make_pair(m, n);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  Int value = recursive_memo(m, n - 1, memo);
  Int step = recursive_memo(m - 1, n, memo);
  if (n % 2 == 0)
    value += step;
  else
    value -= step;
  value = boost::multiprecision::abs(value);
  memo.emplace(key, value);
  return value;
}

}  // namespace

Int staircase_signature_recursive(int m, int n) {
  if (m < 0 || n < 0) fail(Errc::invalid_argument, "signature needs m, n >= 0");
  std::map<std::pair<int, int>, Int> memo;
  return recursive_memo(m, n, memo);
}

}  // namespace foldtri
