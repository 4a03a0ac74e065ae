#include "polycert/groebner.hpp"

#include <algorithm>
#include <list>
#include <set>

namespace polycert {

namespace {

struct BasisElem {
    RatPoly poly;
    Monomial lt;
    Rat lc;
    int sugar;
};

BasisElem make_elem(RatPoly p, MonoOrder ord, int sugar) {
    auto [m, c] = p.leading_term(ord);
    return BasisElem{std::move(p), m, c, sugar};
}

// Divides every term of p by the basis; returns the remainder and tracks the
// sugar (homogenized degree) of the reductum chain.
RatPoly reduce_full(RatPoly p, const std::vector<BasisElem>& basis, MonoOrder ord, int* sugar) {
    RatPoly::TermMap remainder;
    while (!p.is_zero()) {
        auto [ltm, ltc] = p.leading_term(ord);
        bool reduced = false;
        for (const auto& g : basis) {
            if (!g.lt.divides(ltm)) continue;
            Monomial q = ltm / g.lt;
            Rat factor = ltc / g.lc;
            p = p - RatPoly::monomial(p.ring(), q, factor) * g.poly;
            if (sugar) *sugar = std::max(*sugar, q.degree() + g.sugar);
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.emplace(ltm, ltc);
            p = p - RatPoly::monomial(p.ring(), ltm, ltc);
        }
    }
    return RatPoly(p.ring(), std::move(remainder));
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    int sugar;
};

}  // namespace

GroebnerBasis groebner_basis(const std::vector<RatPoly>& ideal, MonoOrder order) {
    if (ideal.empty()) throw std::invalid_argument("groebner_basis: empty generator list");
    RingPtr ring = ideal.front().ring();
    for (const auto& p : ideal)
        if (!same_ring(ring, p.ring())) throw RingMismatchError("generators live in different rings");

    std::vector<BasisElem> basis;
    for (const auto& p : ideal) {
        if (p.is_zero()) continue;
        basis.push_back(make_elem(p, order, p.total_degree()));
    }
    if (basis.empty()) return GroebnerBasis{ring, {}, order};

    auto add_pairs = [&](std::vector<Pair>& pairs, std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Monomial l = Monomial::lcm(basis[i].lt, basis[j].lt);
            int sugar = std::max(basis[i].sugar + (l / basis[i].lt).degree(),
                                 basis[j].sugar + (l / basis[j].lt).degree());
            pairs.push_back(Pair{i, j, std::move(l), sugar});
        }
    };

    std::vector<Pair> pairs;
    for (std::size_t j = 1; j < basis.size(); ++j) add_pairs(pairs, j);
    std::set<std::pair<std::size_t, std::size_t>> handled;

    while (!pairs.empty()) {
        // Sugar strategy: smallest sugar, then smallest lcm, then indices.
        auto best = pairs.begin();
        for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
            if (it->sugar != best->sugar) {
                if (it->sugar < best->sugar) best = it;
                continue;
            }
            int c = mono_cmp(it->lcm, best->lcm, order);
            if (c < 0 || (c == 0 && std::tie(it->i, it->j) < std::tie(best->i, best->j))) best = it;
        }
        Pair pr = *best;
        pairs.erase(best);
        handled.insert({pr.i, pr.j});

        // Buchberger's first criterion: coprime leading terms.
        if (pr.lcm == basis[pr.i].lt * basis[pr.j].lt) continue;
        // Chain criterion: some k with lt_k | lcm and both (i,k), (j,k) done.
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j || !basis[k].lt.divides(pr.lcm)) continue;
            auto key_ik = std::minmax(pr.i, k);
            auto key_jk = std::minmax(pr.j, k);
            if (handled.count({key_ik.first, key_ik.second}) &&
                handled.count({key_jk.first, key_jk.second}))
                skip = true;
        }
        if (skip) continue;

        const BasisElem& f = basis[pr.i];
        const BasisElem& g = basis[pr.j];
        RatPoly spoly = RatPoly::monomial(ring, pr.lcm / f.lt, Rat(1) / f.lc) * f.poly -
                        RatPoly::monomial(ring, pr.lcm / g.lt, Rat(1) / g.lc) * g.poly;
        int sugar = pr.sugar;
        RatPoly rem = reduce_full(std::move(spoly), basis, order, &sugar);
        if (rem.is_zero()) continue;
        basis.push_back(make_elem(std::move(rem), order, sugar));
        add_pairs(pairs, basis.size() - 1);
    }

    // Inter-reduce: drop elements whose lead is divisible by another lead,
    // then fully reduce the tails and make everything monic.
    std::vector<BasisElem> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (basis[j].lt.divides(basis[i].lt) &&
                (basis[j].lt != basis[i].lt || j < i))
                redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    std::vector<RatPoly> out;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<BasisElem> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        RatPoly r = reduce_full(minimal[i].poly, others, order, nullptr);
        auto [m, c] = r.leading_term(order);
        out.push_back(r * (Rat(1) / c));
    }
    std::sort(out.begin(), out.end(), [order](const RatPoly& a, const RatPoly& b) {
        return mono_cmp(a.leading_term(order).first, b.leading_term(order).first, order) < 0;
    });
    return GroebnerBasis{ring, std::move(out), order};
}

RatPoly normal_form(const RatPoly& p, const GroebnerBasis& gb) {
    if (gb.empty()) return p;
    if (!same_ring(p.ring(), gb.ring)) throw RingMismatchError("normal_form: ring mismatch");
    std::vector<BasisElem> basis;
    basis.reserve(gb.gens.size());
    for (const auto& g : gb.gens) basis.push_back(make_elem(g, gb.order, 0));
    return reduce_full(p, basis, gb.order, nullptr);
}

bool in_ideal(const RatPoly& p, const GroebnerBasis& gb) { return normal_form(p, gb).is_zero(); }

bool is_groebner(const std::vector<RatPoly>& gens, MonoOrder order) {
    std::vector<BasisElem> basis;
    for (const auto& g : gens)
        if (!g.is_zero()) basis.push_back(make_elem(g, order, 0));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            Monomial l = Monomial::lcm(basis[i].lt, basis[j].lt);
            RatPoly s =
                RatPoly::monomial(basis[i].poly.ring(), l / basis[i].lt, Rat(1) / basis[i].lc) *
                    basis[i].poly -
                RatPoly::monomial(basis[j].poly.ring(), l / basis[j].lt, Rat(1) / basis[j].lc) *
                    basis[j].poly;
        if (!reduce_full(std::move(s), basis, order, nullptr).is_zero()) return false;
        }
    }
    return true;
}

bool projective_zero_set_empty(const std::vector<RatPoly>& homogeneous_gens, MonoOrder order) {
    if (homogeneous_gens.empty()) return false;
    for (const auto& g : homogeneous_gens)
        if (!g.is_homogeneous())
            throw std::invalid_argument("projective_zero_set_empty: non-homogeneous generator");
    std::vector<RatPoly> gens;
    for (const auto& g : homogeneous_gens)
        if (!g.is_zero()) gens.push_back(g);
    if (gens.empty()) return false;
    GroebnerBasis gb = groebner_basis(gens, order);
    // Unit ideal: empty zero set already in affine space.
    for (const auto& g : gb.gens)
        if (g.is_constant() && !g.is_zero()) return true;
    const std::size_t n = gb.ring->size();
    for (std::size_t v = 0; v < n; ++v) {
        bool found = false;
        for (const auto& g : gb.gens) {
            const Monomial& lt = g.leading_term(gb.order).first;
            bool pure = lt.e[v] > 0;
            for (std::size_t i = 0; i < n && pure; ++i)
                if (i != v && lt.e[i] != 0) pure = false;
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace polycert
