#include "polycert/resolution.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

namespace polycert {

namespace {

struct ModMono {
    Monomial m;
    int comp = 0;

    bool operator==(const ModMono& o) const { return comp == o.comp && m == o.m; }
};

// Element of a free module S^r with graded components.
struct ModPoly {
    std::vector<RatPoly> c;

    bool is_zero() const {
        return std::all_of(c.begin(), c.end(), [](const RatPoly& p) { return p.is_zero(); });
    }
};

// Orders for the Schreyer chain. Level 0 compares within S^1 by the ring
// order; level k maps a monomial through the leading terms of the level-k-1
// basis and recurses, breaking ties by component (lower component is larger).
class OrderChain {
public:
    explicit OrderChain(MonoOrder base) : base_(base) {}

    void push_level(std::vector<ModMono> lts) { lts_.push_back(std::move(lts)); }

    int cmp(int level, const ModMono& a, const ModMono& b) const {
        if (level == 0) {
            int c = mono_cmp(a.m, b.m, base_);
            if (c != 0) return c;
        } else {
            const auto& prev = lts_[level - 1];
            ModMono ia{a.m * prev[a.comp].m, prev[a.comp].comp};
            ModMono ib{b.m * prev[b.comp].m, prev[b.comp].comp};
            int c = cmp(level - 1, ia, ib);
            if (c != 0) return c;
        }
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        return 0;
    }

private:
    MonoOrder base_;
    std::vector<std::vector<ModMono>> lts_;
};

struct ModTermRef {
    ModMono mono;
    Rat coeff;
};

ModTermRef leading_mod_term(const ModPoly& p, const OrderChain& chain, int level) {
    const Monomial* best_m = nullptr;
    int best_comp = -1;
    const Rat* best_c = nullptr;
    for (std::size_t comp = 0; comp < p.c.size(); ++comp) {
        for (const auto& [m, c] : p.c[comp].terms()) {
            ModMono cand{m, static_cast<int>(comp)};
            if (!best_m || chain.cmp(level, cand, ModMono{*best_m, best_comp}) > 0) {
                best_m = &m;
                best_comp = static_cast<int>(comp);
                best_c = &c;
            }
        }
    }
    if (!best_m) throw std::domain_error("leading term of zero module element");
    return ModTermRef{ModMono{*best_m, best_comp}, *best_c};
}

struct ModElem {
    ModPoly poly;
    ModMono lt;
    Rat lc;
};

// Full division in the free module; when `quot` is given, fills the
// multiplier polynomial applied to each basis element.
ModPoly reduce_mod(ModPoly p, const std::vector<ModElem>& basis, const OrderChain& chain, int level,
                   const RingPtr& ring, std::vector<RatPoly>* quot) {
    ModPoly rem;
    rem.c.assign(p.c.size(), RatPoly::zero(ring));
    while (!p.is_zero()) {
        ModTermRef lt = leading_mod_term(p, chain, level);
        bool reduced = false;
        for (std::size_t t = 0; t < basis.size(); ++t) {
            const ModElem& g = basis[t];
            if (g.lt.comp != lt.mono.comp || !g.lt.m.divides(lt.mono.m)) continue;
            RatPoly mult = RatPoly::monomial(ring, lt.mono.m / g.lt.m, lt.coeff / g.lc);
            for (std::size_t comp = 0; comp < p.c.size(); ++comp)
                p.c[comp] = p.c[comp] - mult * g.poly.c[comp];
            if (quot) (*quot)[t] = (*quot)[t] + mult;
            reduced = true;
            break;
        }
        if (!reduced) {
            RatPoly term = RatPoly::monomial(ring, lt.mono.m, lt.coeff);
            rem.c[lt.mono.comp] = rem.c[lt.mono.comp] + term;
            p.c[lt.mono.comp] = p.c[lt.mono.comp] - term;
        }
    }
    return rem;
}

int mod_degree(const ModPoly& p, const std::vector<int>& shifts) {
    int d = kNegInfDegree;
    for (std::size_t comp = 0; comp < p.c.size(); ++comp)
        if (!p.c[comp].is_zero()) d = std::max(d, p.c[comp].total_degree() + shifts[comp]);
    return d;
}

bool mod_homogeneous(const ModPoly& p, const std::vector<int>& shifts) {
    int d = kNegInfDegree;
    for (std::size_t comp = 0; comp < p.c.size(); ++comp) {
        const RatPoly& q = p.c[comp];
        if (q.is_zero()) continue;
        if (!q.is_homogeneous()) return false;
        int dd = q.total_degree() + shifts[comp];
        if (d != kNegInfDegree && dd != d) return false;
        d = dd;
    }
    return true;
}

// Removes a unit entry at (row, col) of maps[k] and fixes the neighbours.
void prune_unit(std::vector<PolyMatrix>& maps, std::vector<std::vector<int>>& shifts, int k,
                std::size_t row, std::size_t col) {
    PolyMatrix& A = maps[k];
    const Rat u = A[row][col].constant_coeff();
    const std::size_t rows = A.size(), cols = A[0].size();

    PolyMatrix B;
    B.reserve(rows - 1);
    for (std::size_t i = 0; i < rows; ++i) {
        if (i == row) continue;
        std::vector<RatPoly> r;
        r.reserve(cols - 1);
        for (std::size_t j = 0; j < cols; ++j) {
            if (j == col) continue;
            r.push_back(A[i][j] - A[i][col] * A[row][j] * (Rat(1) / u));
        }
        B.push_back(std::move(r));
    }
    maps[k] = std::move(B);
    shifts[k].erase(shifts[k].begin() + static_cast<long>(col));
    if (k >= 1) shifts[k - 1].erase(shifts[k - 1].begin() + static_cast<long>(row));

    if (k + 1 < static_cast<int>(maps.size()) && !maps[k + 1].empty())
        maps[k + 1].erase(maps[k + 1].begin() + static_cast<long>(col));
    if (k >= 1 && !maps[k - 1].empty())
        for (auto& r : maps[k - 1]) r.erase(r.begin() + static_cast<long>(row));
}

}  // namespace

Resolution minimal_free_resolution(const std::vector<RatPoly>& homogeneous_ideal, MonoOrder order) {
    if (homogeneous_ideal.empty()) throw std::invalid_argument("empty generator list");
    RingPtr ring = homogeneous_ideal.front().ring();
    bool all_zero = true;
    for (const auto& g : homogeneous_ideal) {
        if (!g.is_homogeneous()) throw std::invalid_argument("generators must be homogeneous");
        if (!g.is_zero()) {
            all_zero = false;
            if (g.is_constant()) throw std::invalid_argument("unit ideal has no graded resolution of S/J");
        }
    }

    Resolution res;
    res.ring = ring;
    if (all_zero) {
        res.length = 0;
        return res;  // S itself: M = 0.
    }

    GroebnerBasis gb = groebner_basis(homogeneous_ideal, order);
    OrderChain chain(order);

    // Level-0 basis: the GB of J viewed inside S^1.
    std::vector<ModElem> level;
    std::vector<int> level_shifts;
    for (const auto& g : gb.gens) {
        ModPoly p;
        p.c = {g};
        auto [m, c] = g.leading_term(order);
        level.push_back(ModElem{std::move(p), ModMono{m, 0}, c});
        level_shifts.push_back(g.total_degree());
    }

    std::vector<PolyMatrix> maps;
    std::vector<std::vector<int>> shifts;
    {
        PolyMatrix a1(1);
        for (const auto& e : level) a1[0].push_back(e.poly.c[0]);
        maps.push_back(std::move(a1));
        shifts.push_back(level_shifts);
    }

    const int hard_cap = static_cast<int>(ring->size()) + 2;
    std::vector<int> prev_shifts = {0};
    for (int lvl = 0;; ++lvl) {
        if (lvl > hard_cap) throw std::logic_error("resolution did not terminate");

        std::vector<ModMono> lts;
        for (const auto& e : level) lts.push_back(e.lt);
        chain.push_level(lts);

        // Syzygies of the current basis via S-pair reductions (Schreyer):
        // these are a Groebner basis for the induced order of level lvl+1.
        std::vector<ModPoly> syz;
        std::vector<int> syz_deg;
        const std::size_t r = level.size();
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = i + 1; j < r; ++j) {
                if (level[i].lt.comp != level[j].lt.comp) continue;
                Monomial l = Monomial::lcm(level[i].lt.m, level[j].lt.m);
                RatPoly mi = RatPoly::monomial(ring, l / level[i].lt.m, Rat(1) / level[i].lc);
                RatPoly mj = RatPoly::monomial(ring, l / level[j].lt.m, Rat(1) / level[j].lc);
                ModPoly s;
                s.c.assign(level.front().poly.c.size(), RatPoly::zero(ring));
                for (std::size_t comp = 0; comp < s.c.size(); ++comp)
                    s.c[comp] = mi * level[i].poly.c[comp] - mj * level[j].poly.c[comp];
                std::vector<RatPoly> quot(r, RatPoly::zero(ring));
                ModPoly rem = reduce_mod(std::move(s), level, chain, lvl, ring, &quot);
                if (!rem.is_zero()) throw std::logic_error("S-polynomial did not reduce to zero");
                ModPoly z;
                z.c.assign(r, RatPoly::zero(ring));
                z.c[i] = mi;
                z.c[j] = RatPoly::zero(ring) - mj;
                for (std::size_t t = 0; t < r; ++t) z.c[t] = z.c[t] - quot[t];
                int deg = mod_degree(z, shifts[lvl]);
                if (!mod_homogeneous(z, shifts[lvl])) throw std::logic_error("non-homogeneous syzygy");
                syz.push_back(std::move(z));
                syz_deg.push_back(deg);
            }
        }
        if (syz.empty()) break;

        // Becomes the next level's basis: monic, sorted by its leading term.
        std::vector<ModElem> next;
        for (auto& z : syz) {
            ModTermRef lt = leading_mod_term(z, chain, lvl + 1);
            Rat inv = Rat(1) / lt.coeff;
            for (auto& comp : z.c) comp = comp * inv;
            next.push_back(ModElem{std::move(z), lt.mono, Rat(1)});
        }
        std::vector<std::size_t> perm(next.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
            int c = chain.cmp(lvl + 1, next[x].lt, next[y].lt);
            return c != 0 ? c < 0 : x < y;
        });
        std::vector<ModElem> sorted;
        std::vector<int> sorted_deg;
        for (std::size_t idx : perm) {
            sorted.push_back(std::move(next[idx]));
            sorted_deg.push_back(syz_deg[idx]);
        }

        PolyMatrix a(level.size());
        for (std::size_t i = 0; i < level.size(); ++i)
            for (const auto& e : sorted) a[i].push_back(e.poly.c[i]);
        maps.push_back(std::move(a));
        shifts.push_back(sorted_deg);

        prev_shifts = shifts[lvl];
        level = std::move(sorted);
    }

    // Minimize: split off every nonzero constant entry.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k < maps.size() && !changed; ++k) {
            const PolyMatrix& A = maps[k];
            for (std::size_t i = 0; i < A.size() && !changed; ++i) {
                for (std::size_t j = 0; j < A[i].size() && !changed; ++j) {
                    if (!A[i][j].is_zero() && A[i][j].is_constant()) {
                        if (k == 0) throw std::logic_error("unit entry in a_1: unit ideal");
                        prune_unit(maps, shifts, static_cast<int>(k), i, j);
                        changed = true;
                    }
                }
            }
        }
    }
    while (!maps.empty() && (shifts.back().empty() || maps.back().empty())) {
        maps.pop_back();
        shifts.pop_back();
    }

    // Canonical presentation: generators of each free module sorted by shift.
    for (std::size_t k = 0; k < maps.size(); ++k) {
        std::vector<std::size_t> perm(shifts[k].size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        std::stable_sort(perm.begin(), perm.end(),
                         [&](std::size_t x, std::size_t y) { return shifts[k][x] < shifts[k][y]; });
        std::vector<int> ns;
        PolyMatrix nm(maps[k].size());
        for (std::size_t i = 0; i < maps[k].size(); ++i) nm[i].reserve(perm.size());
        for (std::size_t idx : perm) {
            ns.push_back(shifts[k][idx]);
            for (std::size_t i = 0; i < maps[k].size(); ++i) nm[i].push_back(maps[k][i][idx]);
        }
        shifts[k] = std::move(ns);
        maps[k] = std::move(nm);
        if (k + 1 < maps.size()) {
            PolyMatrix next(perm.size());
            for (std::size_t i = 0; i < perm.size(); ++i) next[i] = std::move(maps[k + 1][perm[i]]);
            maps[k + 1] = std::move(next);
        }
    }

    res.maps = std::move(maps);
    res.shifts = std::move(shifts);
    res.length = static_cast<int>(res.maps.size());
    res.length_exceeds_ambient = res.length > static_cast<int>(ring->size()) - 1;
    validate_resolution(res);
    return res;
}

int kappa0_of(const Resolution& res) {
    int k0 = 0;
    for (const auto& level : res.shifts)
        for (int d : level) k0 = std::max(k0, d);
    return k0;
}

RegularityInfo regularity(const Resolution& res) {
    RegularityInfo info;
    if (res.length == 0) return info;
    info.defined = true;
    int cm = kNegInfDegree;
    for (int k = 1; k <= res.length; ++k)
        for (int d : res.d(k)) cm = std::max(cm, d - k);
    info.castelnuovo_mumford = cm + 1;
    info.shift_based = 1 + kappa0_of(res);
    return info;
}

std::vector<std::vector<std::pair<int, int>>> betti_table(const Resolution& res) {
    std::vector<std::vector<std::pair<int, int>>> table;
    for (const auto& level : res.shifts) {
        std::map<int, int> counts;
        for (int d : level) counts[d]++;
        table.emplace_back(counts.begin(), counts.end());
    }
    return table;
}

void validate_resolution(const Resolution& res) {
    const RingPtr& ring = res.ring;
    for (int k = 1; k <= res.length; ++k) {
        const PolyMatrix& A = res.a(k);
        const std::vector<int>& dk = res.d(k);
        const std::vector<int> dprev = k == 1 ? std::vector<int>{0} : res.d(k - 1);
        if (A.size() != dprev.size()) throw std::logic_error("map row count mismatch");
        for (std::size_t i = 0; i < A.size(); ++i) {
            if (A[i].size() != dk.size()) throw std::logic_error("map column count mismatch");
            for (std::size_t j = 0; j < A[i].size(); ++j) {
                const RatPoly& e = A[i][j];
                if (e.is_zero()) continue;
                if (!e.is_homogeneous()) throw std::logic_error("map entry is not homogeneous");
                if (e.total_degree() != dk[j] - dprev[i])
                    throw std::logic_error("map entry degree violates the shift table");
                if (e.is_constant()) throw std::logic_error("resolution is not minimal");
            }
        }
        if (k < res.length) {
            const PolyMatrix& B = res.a(k + 1);
            for (std::size_t i = 0; i < A.size(); ++i) {
                for (std::size_t j = 0; j < B[0].size(); ++j) {
                    RatPoly acc = RatPoly::zero(ring);
                    for (std::size_t t = 0; t < B.size(); ++t) acc = acc + A[i][t] * B[t][j];
                    if (!acc.is_zero()) throw std::logic_error("a_k a_{k+1} != 0");
                }
            }
        }
    }
}

std::string resolution_to_json(const Resolution& res) {
    nlohmann::json j;
    j["shifts"] = res.shifts;
    nlohmann::json maps = nlohmann::json::array();
    for (const auto& m : res.maps) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : m) {
            nlohmann::json r = nlohmann::json::array();
            for (const auto& p : row) r.push_back(p.to_string());
            rows.push_back(r);
        }
        maps.push_back(rows);
    }
    j["maps"] = maps;
    return j.dump();
}

}  // namespace polycert
