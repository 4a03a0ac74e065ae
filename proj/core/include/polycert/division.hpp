#pragma once

#include <variant>
#include <vector>

#include "polycert/bounds.hpp"
#include "polycert/groebner.hpp"

namespace polycert {

// Find Q_1..Q_m with sum F_j Q_j = Phi modulo the ideal of V and
// deg(F_j Q_j) <= rho.
struct DivisionProblem {
    RingPtr ring;
    std::vector<RatPoly> V_gens;  // generators of I(V); empty means V = C^n
    std::vector<RatPoly> F;
    RatPoly Phi;
    int rho = 0;
};

struct Certificate {
    std::vector<RatPoly> Q;
    int rho_used = 0;
    RatPoly residual;  // normal form of sum F_j Q_j - Phi; must be zero
    DegreeBound bound_trace;
    int mu0_used = 0;
};

// No solution with deg(F_j Q_j) <= rho. Says nothing about membership at
// larger degrees.
struct Infeasible {
    int rho = 0;
};

using SolveOutcome = std::variant<Certificate, Infeasible>;

struct SolveOptions {
    std::size_t unknown_cap = 200000;  // guard against runaway ansatz sizes
};

// The ansatz linear system at a given cap on deg Q_j: unknowns are the
// coefficients of every monomial of degree <= min(cap, rho - deg F_j) per
// Q_j, equations force each coefficient of NF(sum F_j Q_j - Phi) to vanish.
struct DivisionSystem {
    std::vector<std::pair<std::size_t, Monomial>> unknowns;  // (j, monomial)
    std::vector<std::vector<Rat>> A;
    std::vector<Rat> b;
};

DivisionSystem build_division_system(const DivisionProblem& p, const GroebnerBasis& gb,
                                     int degree_cap);

// Exact solve via fraction-free elimination. Among solutions, minimizes
// max_j deg Q_j first and then picks the canonical elimination-order
// solution (free coefficients zero).
SolveOutcome solve_certificate(const DivisionProblem& p, const SolveOptions& opts = {});

bool verify_certificate(const Certificate& c, const DivisionProblem& p);

struct NullsatzOptions {
    int mu0_start = 0;
    int mu0_cap = 8;
    SolveOptions solve;
};

struct NullsatzFailure {
    int last_rho = 0;
    int mu0_reached = 0;
};

using NullsatzOutcome = std::variant<Certificate, NullsatzFailure>;

// Drives solve_certificate with Phi = 1 at the general degree bound,
// escalating mu0 until the system becomes feasible or the cap is hit.
// `params` must carry everything except degPhi and mu0.
NullsatzOutcome nullstellensatz_certificate(const std::vector<RatPoly>& F,
                                            const std::vector<RatPoly>& V_gens, BoundParams params,
                                            int kappa0, const NullsatzOptions& opts = {});

}  // namespace polycert
