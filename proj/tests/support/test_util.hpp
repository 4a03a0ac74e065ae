#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "polycert/parse.hpp"

namespace polycert::testing {

inline RingPtr ring_of(std::initializer_list<const char*> names) {
    std::vector<std::string> v(names.begin(), names.end());
    return make_ring(std::move(v));
}

inline RatPoly pp(const std::string& text, const RingPtr& ring) { return parse_poly(text, ring); }

// Random polynomial with small integer coefficients; deterministic per rng.
inline RatPoly random_poly(const RingPtr& ring, int max_degree, std::mt19937& rng,
                           bool homogeneous = false, double keep = 0.5) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    RatPoly p = RatPoly::zero(ring);
    std::vector<Monomial> monos;
    std::function<void(Monomial&, std::size_t, int)> rec = [&](Monomial& m, std::size_t var,
                                                               int remaining) {
        if (var == ring->size()) {
            if (!homogeneous || m.degree() == max_degree) monos.push_back(m);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            m.e[var] = e;
            rec(m, var + 1, remaining - e);
        }
        m.e[var] = 0;
    };
    Monomial m(ring->size());
    rec(m, 0, max_degree);
    for (const auto& mono : monos) {
        if (u(rng) > keep) continue;
        int c = coeff(rng);
        if (c != 0) p = p + RatPoly::monomial(ring, mono, Rat(c));
    }
    if (p.is_zero()) p = RatPoly::monomial(ring, monos.front(), Rat(1));
    return p;
}

}  // namespace polycert::testing
