#include "polycert/bounds.hpp"

#include <algorithm>

namespace polycert {

void BoundParams::validate() const {
    if (n < 1 || n > N) throw std::invalid_argument("BoundParams: need 1 <= n <= N");
    if (m < 1) throw std::invalid_argument("BoundParams: need m >= 1");
    if (d < 1) throw std::invalid_argument("BoundParams: need d >= 1");
    if (degX < 1) throw std::invalid_argument("BoundParams: need degX >= 1");
    if (c_inf && (*c_inf > std::min(m, n) || *c_inf < 0))
        throw std::invalid_argument("BoundParams: need 0 <= c_inf <= min(m, n)");
    if (mu0 < 0 || mu_prime < 0) throw std::invalid_argument("BoundParams: mu0, mu' >= 0");
}

std::string to_string(BoundFormula f) {
    switch (f) {
        case BoundFormula::polupp: return "polupp";
        case BoundFormula::polupp2: return "polupp2";
        case BoundFormula::jelonek: return "jelonek";
        case BoundFormula::base: return "base";
    }
    return "base";
}

int mu_of(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("mu_of: need m, n >= 1");
    return std::min(m, n);
}

long cinf_power_term(int d, std::optional<int> c_inf, int degX) {
    if (!c_inf) return 0;
    long p = 1;
    for (int i = 0; i < *c_inf; ++i) p *= d;
    return p * degX;
}

namespace {

DegreeBound make_bound(long phi_branch, long base_branch, BoundFormula tag) {
    DegreeBound b;
    b.formula_tag = tag;
    b.rho = static_cast<int>(std::max(phi_branch, base_branch));
    if (phi_branch > base_branch)
        b.branch = "phi-term";
    else if (base_branch > phi_branch)
        b.branch = "base-degree";
    else
        b.branch = "tie";
    return b;
}

}  // namespace

DegreeBound rho_bound_general(const BoundParams& p, int kappa0) {
    p.validate();
    const int mu = mu_of(p.m, p.n);
    const long phi_branch = p.degPhi + static_cast<long>(mu + p.mu0) * cinf_power_term(p.d, p.c_inf, p.degX);
    const long base_branch = static_cast<long>(p.d) * std::min(p.m, p.n + 1) + kappa0 - p.N;
    return make_bound(phi_branch, base_branch, BoundFormula::polupp);
}

DegreeBound rho_bound_smooth(const BoundParams& p, int kappa0) {
    p.validate();
    const int mu = mu_of(p.m, p.n);
    const long phi_branch =
        p.degPhi + static_cast<long>(mu) * cinf_power_term(p.d, p.c_inf, p.degX) + p.mu_prime;
    const long base_branch = static_cast<long>(p.d) * std::min(p.m, p.n + 1) + kappa0 - p.N;
    return make_bound(phi_branch, base_branch, BoundFormula::polupp2);
}

long jelonek_bound(int d, int m, int n, int degX) {
    const int c_m = m <= n ? 1 : 2;
    long p = 1;
    for (int i = 0; i < mu_of(m, n); ++i) p *= d;
    return c_m * p * degX;
}

bool no_zeros_at_infinity(const std::vector<RatPoly>& f_homogeneous,
                          const std::vector<RatPoly>& JX_gens) {
    if (f_homogeneous.empty()) throw std::invalid_argument("no_zeros_at_infinity: empty f list");
    RingPtr ring = f_homogeneous.front().ring();
    std::vector<RatPoly> gens;
    for (const auto& f : f_homogeneous) {
        if (!f.is_homogeneous()) throw std::invalid_argument("no_zeros_at_infinity: f not homogeneous");
        gens.push_back(f);
    }
    for (const auto& g : JX_gens) {
        if (!g.is_homogeneous())
            throw std::invalid_argument("no_zeros_at_infinity: J_X generator not homogeneous");
        gens.push_back(g);
    }
    gens.push_back(RatPoly::variable(ring, 0));  // the hyperplane at infinity z0 = 0
    return projective_zero_set_empty(gens);
}

}  // namespace polycert
