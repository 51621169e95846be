#pragma once

#include <cstdint>
#include <vector>

#include "foldtri/numeric.hpp"

namespace foldtri {

using IntMatrix = std::vector<std::vector<Int>>;

// Determinant of a square integer matrix, fraction-free Bareiss elimination.
Int det(IntMatrix m);

// Solves A * x_j = den * b_j exactly over the integers for every column b_j of
// rhs, where den = det(A). Returns den and the solution columns; den == 0
// signals a singular A (solutions are then meaningless).
struct ExactSolve {
  Int den;
  std::vector<std::vector<Int>> columns;
};
ExactSolve solve_columns(IntMatrix a, std::vector<std::vector<Int>> rhs);

// Rank over the rationals of an arbitrary integer matrix.
int rank_rational(IntMatrix m);

// Rows packed as bitsets over GF(2).
struct Gf2Matrix {
  int cols = 0;
  std::vector<std::vector<std::uint64_t>> rows;

  static Gf2Matrix from_integers(const IntMatrix& m);
  void append_row(const std::vector<Int>& row);
};

int rank_gf2(Gf2Matrix m);

// Whether A x = target is solvable over GF(2); matrix columns are the
// generators, target the all-ones vector in our use.
bool solvable_gf2(Gf2Matrix a, const std::vector<std::uint64_t>& target_row);

// Nonzero elementary divisors d_1 | d_2 | ... of an integer matrix.
std::vector<Int> elementary_divisors(IntMatrix m);

}  // namespace foldtri
