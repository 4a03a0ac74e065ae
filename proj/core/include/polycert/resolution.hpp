#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polycert/groebner.hpp"

namespace polycert {

using PolyMatrix = std::vector<std::vector<RatPoly>>;  // maps[r][c]

// Minimal graded free resolution of S/J for a homogeneous ideal J:
//   0 -> S_M -> ... -> S_1 -> S_0 = S,
// where S_k = (+) S(-d_k^i). maps[k-1] is the matrix of a_k (r_{k-1} x r_k
// polynomial entries) and shifts[k-1] is the list d_k^1..d_k^{r_k}.
// Invariants: a_k a_{k+1} = 0 exactly, deg a_k^{ij} = d_k^j - d_{k-1}^i
// (with d_0 = [0]), and no map has a nonzero constant entry.
struct Resolution {
    RingPtr ring;
    int length = 0;                        // M
    std::vector<std::vector<int>> shifts;  // shifts[k-1] = d_k
    std::vector<PolyMatrix> maps;          // maps[k-1] = a_k
    bool length_exceeds_ambient = false;   // M > N: input was not the radical
                                           // ideal of a pure-dimensional variety

    const std::vector<int>& d(int k) const { return shifts[k - 1]; }
    const PolyMatrix& a(int k) const { return maps[k - 1]; }
    std::size_t rank(int k) const { return k == 0 ? 1 : shifts[k - 1].size(); }
};

Resolution minimal_free_resolution(const std::vector<RatPoly>& homogeneous_ideal,
                                   MonoOrder order = MonoOrder::grevlex);

// max_{k<=M, i} d_k^i; 0 for the empty resolution (only d_0 = 0).
int kappa0_of(const Resolution& res);

struct RegularityInfo {
    int castelnuovo_mumford = 0;  // max_{k>=1,i} (d_k^i - k) + 1, regularity of J
    int shift_based = 0;          // 1 + max_{k<=M,i} d_k^i
    bool defined = false;         // false when M = 0
};

RegularityInfo regularity(const Resolution& res);

// Betti numbers of S/J read off the shifts: betti[k][j] = #{i : d_k^i = j}.
std::vector<std::vector<std::pair<int, int>>> betti_table(const Resolution& res);

// Hilbert polynomial data of S/J computed from the shifts: for t >> 0,
// H(t) = sum_k (-1)^k sum_i C(t - d_k^i + N, N). Yields dim X = deg H and
// deg X = (leading coefficient) * (dim X)!.
struct HilbertData {
    int dimension = -1;  // projective dimension n of X; -1 for H = 0
    long degree = 0;     // deg X
};

HilbertData hilbert_data(const Resolution& res);

// Exactness, grading and minimality checks; throws std::logic_error on the
// first violated invariant (used by tests and after construction).
void validate_resolution(const Resolution& res);

std::string resolution_to_json(const Resolution& res);

}  // namespace polycert
