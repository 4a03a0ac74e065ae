#include "polycert/linsolve.hpp"

#include <algorithm>
#include <stdexcept>

namespace polycert {

LinearSolveResult solve_exact(std::vector<std::vector<Rat>> Aq, std::vector<Rat> bq) {
    const std::size_t rows = Aq.size();
    const std::size_t cols = rows == 0 ? 0 : Aq[0].size();
    if (bq.size() != rows) throw std::invalid_argument("solve_exact: rhs size mismatch");

    // Clear denominators row by row; solutions are unchanged.
    std::vector<std::vector<Int>> A(rows, std::vector<Int>(cols));
    std::vector<Int> b(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        Int scale(1);
        for (const auto& v : Aq[i]) scale = lcm(scale, v.get_den());
        scale = lcm(scale, bq[i].get_den());
        for (std::size_t j = 0; j < cols; ++j) {
            Rat v = Aq[i][j] * Rat(scale);
            A[i][j] = v.get_num();
        }
        Rat v = bq[i] * Rat(scale);
        b[i] = v.get_num();
    }

    LinearSolveResult res;
    Int prev_pivot(1);
    std::size_t pivot_row = 0;
    std::vector<std::size_t> pivot_col_of_row;

    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        // Sparsest nonzero candidate, then smallest |value|, then index.
        std::size_t best = rows;
        std::size_t best_nnz = 0;
        for (std::size_t i = pivot_row; i < rows; ++i) {
            if (A[i][col] == 0) continue;
            std::size_t nnz = 0;
            for (std::size_t j = col; j < cols; ++j)
                if (A[i][j] != 0) ++nnz;
            if (best == rows || nnz < best_nnz ||
                (nnz == best_nnz && cmp(abs(A[i][col]), abs(A[best][col])) < 0)) {
                best = i;
                best_nnz = nnz;
            }
        }
        if (best == rows) continue;  // free column
        std::swap(A[pivot_row], A[best]);
        std::swap(b[pivot_row], b[best]);

        const Int pivot = A[pivot_row][col];
        for (std::size_t i = pivot_row + 1; i < rows; ++i) {
            const Int factor = A[i][col];
            for (std::size_t j = col; j < cols; ++j) {
                Int v = A[i][j] * pivot - factor * A[pivot_row][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
                A[i][j] = std::move(v);
            }
            Int v = b[i] * pivot - factor * b[pivot_row];
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
            b[i] = std::move(v);
        }
        prev_pivot = pivot;
        res.pivot_cols.push_back(col);
        pivot_col_of_row.push_back(col);
        ++pivot_row;
    }
    res.rank = pivot_row;

    for (std::size_t i = pivot_row; i < rows; ++i)
        if (b[i] != 0) return res;  // inconsistent
    res.consistent = true;

    // Back-substitution over Q with free variables pinned to zero.
    res.x.assign(cols, Rat(0));
    for (std::size_t r = pivot_row; r-- > 0;) {
        const std::size_t pc = pivot_col_of_row[r];
        Rat acc(b[r]);
        for (std::size_t j = pc + 1; j < cols; ++j)
            if (A[r][j] != 0 && res.x[j] != 0) acc -= Rat(A[r][j]) * res.x[j];
        res.x[pc] = acc / Rat(A[r][pc]);
    }
    return res;
}

}  // namespace polycert
