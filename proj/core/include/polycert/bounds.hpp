#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polycert/groebner.hpp"

namespace polycert {

// Inputs of the degree-bound formulas. c_inf uses nullopt for the "minus
// infinity" sentinel: no distinguished variety at infinity, in which case
// the term d^{c_inf} * degX is exactly 0.
struct BoundParams {
    int d = 1;        // max degree of the F_j
    int m = 1;        // number of F_j
    int n = 1;        // dim V
    int N = 1;        // ambient dimension
    int degX = 1;     // degree of the projective closure X
    std::optional<int> c_inf;  // nullopt = -infinity
    int mu0 = 0;      // non-effective constant, user configuration
    int mu_prime = 0; // non-effective constant, user configuration
    int degPhi = 0;

    void validate() const;
};

enum class BoundFormula { polupp, polupp2, jelonek, base };

std::string to_string(BoundFormula f);

struct DegreeBound {
    int rho = 0;
    std::string branch;   // which max-argument won: "phi-term", "base-degree", "tie", "manual"
    BoundFormula formula_tag = BoundFormula::base;
};

// mu := min(m, n); always an upper bound for c_inf.
int mu_of(int m, int n);

// d^{c_inf} * degX with the sentinel rule; c_inf must be <= min(m, n).
long cinf_power_term(int d, std::optional<int> c_inf, int degX);

// rho = max(degPhi + (mu + mu0) d^{c_inf} degX, d min(m, n+1) + kappa0 - N).
DegreeBound rho_bound_general(const BoundParams& p, int kappa0);

// rho = max(degPhi + mu d^{c_inf} degX + mu', d min(m, n+1) + kappa0 - N).
DegreeBound rho_bound_smooth(const BoundParams& p, int kappa0);

// c_m d^mu degX with c_m = 1 if m <= n, else 2.
long jelonek_bound(int d, int m, int n, int degX);

// True iff the f_j, cut down to the hyperplane at infinity inside X, have no
// common projective zero: the ideal (f) + (z0) + J_X contains a power of
// every variable. Justifies taking c_inf = -infinity.
bool no_zeros_at_infinity(const std::vector<RatPoly>& f_homogeneous,
                          const std::vector<RatPoly>& JX_gens);

}  // namespace polycert
