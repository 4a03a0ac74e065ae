#pragma once

#include <vector>

#include "polycert/rat.hpp"

namespace polycert {

// Outcome of solving A x = b exactly. When consistent, x is the canonical
// particular solution: columns are eliminated in the given order and every
// free variable is set to zero, so the result is deterministic.
struct LinearSolveResult {
    bool consistent = false;
    std::vector<Rat> x;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

// Fraction-free (Bareiss) Gaussian elimination over Z after clearing row
// denominators. Columns are processed in index order; the pivot row within a
// column is the sparsest remaining one (ties: smallest magnitude, then
// lowest index).
LinearSolveResult solve_exact(std::vector<std::vector<Rat>> A, std::vector<Rat> b);

}  // namespace polycert
