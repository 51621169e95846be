#pragma once

#include <cstdint>
#include <vector>

#include "foldtri/complex.hpp"

namespace foldtri {

// Monotone grid path of m "right" (1) and n "up" (0) moves.
struct Shuffle {
  std::vector<std::uint8_t> bits;
};

// 0 <= s_1 <= ... <= s_m <= n; the grid-shift encoding of a staircase facet.
struct SVector {
  std::vector<int> s;
};

// All shuffles of m ones and n zeros in lexicographic bit-string order.
std::vector<Shuffle> all_shuffles(int m, int n);

// s_k = (1-based position of the k-th one) - k. Throws malformed_shuffle.
SVector shuffle_to_svector(const Shuffle& shuffle, int m, int n);

// Position of the product vertex (e_i, e_j) in the lexrev order: (n+1)i + (n-j).
long long lexrev_position(int n, int i, int j);

// The staircase triangulation of simplex(m) x simplex(n), with the coloring
// (e_i, e_j) -> i + j and the lifting 2^lexrev attached. m, n >= 0.
Triangulation staircase(int m, int n);

// Closed-form staircase signature (sigma_{m,0} = sigma_{0,n} = 1).
Int staircase_signature(int m, int n);

// Same value by the recursion sigma_{m,n} = |sigma_{m,n-1} + (-1)^n sigma_{m-1,n}|.
Int staircase_signature_recursive(int m, int n);

}  // namespace foldtri
