#ifndef TAUTILT_EXACT_SOLVE_HPP
#define TAUTILT_EXACT_SOLVE_HPP

#include <utility>
#include <vector>

#include "tautilt/matrix.hpp"

namespace tautilt {

// One sparse equation sum_j coeff_j * x_j = 0; entries sorted by column.
struct SparseRow {
  std::vector<std::pair<int, Rat>> e;
  void add(int col, const Rat& v) {
    if (!is_zero(v)) e.emplace_back(col, v);
  }
  void normalize();  // sort by column, merge duplicates, drop zeros
};

// Canonical basis of {x : every equation vanishes}, identical to what the
// dense rref free-variable construction returns. Small systems are solved
// densely over Q; large ones by sparse elimination modulo word-size primes
// with CRT lifting, rational reconstruction and an exact verification pass,
// so the result is certified regardless of the prime path taken.
Mat<Rat> nullspace_rows_sparse(std::vector<SparseRow> eqs, int ncols);

}  // namespace tautilt

#endif
