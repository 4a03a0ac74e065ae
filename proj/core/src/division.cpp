#include "polycert/division.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "polycert/linsolve.hpp"

namespace polycert {

namespace {

// All monomials of degree <= max_degree, ascending by (degree, structure).
void enumerate_monomials(std::size_t nvars, int max_degree, std::vector<Monomial>& out) {
    const std::size_t before = out.size();
    Monomial cur(nvars);
    std::function<void(std::size_t, int)> rec = [&](std::size_t var, int remaining) {
        if (var == nvars) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            cur.e[var] = e;
            rec(var + 1, remaining - e);
        }
        cur.e[var] = 0;
    };
    rec(0, max_degree);
    std::stable_sort(out.begin() + static_cast<long>(before), out.end(),
                     [](const Monomial& a, const Monomial& b) {
                         const int da = a.degree(), db = b.degree();
                         return da != db ? da < db : a < b;
                     });
}

}  // namespace

DivisionSystem build_division_system(const DivisionProblem& p, const GroebnerBasis& gb,
                                     int degree_cap) {
    DivisionSystem sys;
    const std::size_t nvars = p.ring->size();

    std::vector<RatPoly> columns;  // NF(F_j * monomial)
    for (std::size_t j = 0; j < p.F.size(); ++j) {
        const int dF = p.F[j].total_degree();
        if (dF == kNegInfDegree) continue;  // zero F_j contributes nothing
        const int cap = std::min(degree_cap, p.rho - dF);
        if (cap < 0) continue;
        std::vector<Monomial> monos;
        enumerate_monomials(nvars, cap, monos);
        for (auto& m : monos) {
            sys.unknowns.emplace_back(j, m);
            columns.push_back(normal_form(RatPoly::monomial(p.ring, m, Rat(1)) * p.F[j], gb));
        }
    }

    const RatPoly rhs = normal_form(p.Phi, gb);
    std::map<Monomial, std::size_t> row_of;
    auto row_index = [&](const Monomial& m) { row_of.emplace(m, row_of.size()); };
    for (const auto& c : columns)
        for (const auto& [m, v] : c.terms()) row_index(m);
    for (const auto& [m, v] : rhs.terms()) row_index(m);

    sys.A.assign(row_of.size(), std::vector<Rat>(columns.size(), Rat(0)));
    sys.b.assign(row_of.size(), Rat(0));
    for (std::size_t col = 0; col < columns.size(); ++col)
        for (const auto& [m, v] : columns[col].terms()) sys.A[row_of[m]][col] = v;
    for (const auto& [m, v] : rhs.terms()) sys.b[row_of[m]] = v;
    return sys;
}

namespace {

std::optional<std::vector<RatPoly>> try_solve_at_cap(const DivisionProblem& p,
                                                     const GroebnerBasis& gb, int cap,
                                                     const SolveOptions& opts) {
    DivisionSystem sys = build_division_system(p, gb, cap);
    if (sys.unknowns.size() > opts.unknown_cap)
        throw std::runtime_error("solve_certificate: ansatz exceeds the unknown-count cap");
    LinearSolveResult sol = solve_exact(std::move(sys.A), std::move(sys.b));
    if (!sol.consistent) return std::nullopt;
    std::vector<RatPoly> Q(p.F.size(), RatPoly::zero(p.ring));
    for (std::size_t k = 0; k < sys.unknowns.size(); ++k) {
        if (sol.x[k] == 0) continue;
        const auto& [j, m] = sys.unknowns[k];
        Q[j] = Q[j] + RatPoly::monomial(p.ring, m, sol.x[k]);
    }
    return Q;
}

}  // namespace

SolveOutcome solve_certificate(const DivisionProblem& p, const SolveOptions& opts) {
    for (const auto& f : p.F)
        if (!same_ring(f.ring(), p.ring)) throw RingMismatchError("F_j in wrong ring");
    for (const auto& g : p.V_gens)
        if (!same_ring(g.ring(), p.ring)) throw RingMismatchError("V generator in wrong ring");
    int max_dF = 0;
    for (const auto& f : p.F)
        if (!f.is_zero()) max_dF = std::max(max_dF, f.total_degree());
    if (p.rho < max_dF) throw std::invalid_argument("solve_certificate: rho below max deg F_j");

    GroebnerBasis gb = p.V_gens.empty() ? GroebnerBasis{p.ring, {}, MonoOrder::grevlex}
                                        : groebner_basis(p.V_gens);

    const int cap_max = p.rho;  // deg Q_j <= rho - deg F_j <= rho
    if (!try_solve_at_cap(p, gb, cap_max, opts)) return Infeasible{p.rho};

    // Smallest cap on max_j deg Q_j for which the system stays feasible.
    int lo = 0, hi = cap_max;
    while (lo < hi) {
        int mid = lo + (hi - lo) / 2;
        if (try_solve_at_cap(p, gb, mid, opts))
            hi = mid;
        else
            lo = mid + 1;
    }
    std::vector<RatPoly> Q = *try_solve_at_cap(p, gb, lo, opts);

    Certificate cert;
    cert.Q = std::move(Q);
    cert.rho_used = p.rho;
    RatPoly acc = RatPoly::zero(p.ring) - p.Phi;
    for (std::size_t j = 0; j < p.F.size(); ++j) acc = acc + p.F[j] * cert.Q[j];
    cert.residual = normal_form(acc, gb);
    cert.bound_trace = DegreeBound{p.rho, "manual", BoundFormula::base};
    if (!verify_certificate(cert, p))
        throw std::logic_error("internal error: solver produced an invalid certificate");
    return cert;
}

bool verify_certificate(const Certificate& c, const DivisionProblem& p) {
    if (c.Q.size() != p.F.size()) return false;
    GroebnerBasis gb = p.V_gens.empty() ? GroebnerBasis{p.ring, {}, MonoOrder::grevlex}
                                        : groebner_basis(p.V_gens);
    RatPoly acc = RatPoly::zero(p.ring) - p.Phi;
    for (std::size_t j = 0; j < p.F.size(); ++j) {
        const RatPoly prod = p.F[j] * c.Q[j];
        if (!prod.is_zero() && prod.total_degree() > c.rho_used) return false;
        acc = acc + prod;
    }
    return normal_form(acc, gb).is_zero();
}

NullsatzOutcome nullstellensatz_certificate(const std::vector<RatPoly>& F,
                                            const std::vector<RatPoly>& V_gens, BoundParams params,
                                            int kappa0, const NullsatzOptions& opts) {
    if (F.empty()) throw std::invalid_argument("nullstellensatz_certificate: empty F");
    const RingPtr ring = F.front().ring();
    params.degPhi = 0;
    int last_rho = 0;
    for (int mu0 = opts.mu0_start; mu0 <= opts.mu0_cap; ++mu0) {
        params.mu0 = mu0;
        DegreeBound bound = rho_bound_general(params, kappa0);
        last_rho = bound.rho;
        int max_dF = 0;
        for (const auto& f : F)
            if (!f.is_zero()) max_dF = std::max(max_dF, f.total_degree());
        if (bound.rho < max_dF) continue;  // escalate until the ansatz admits every F_j
        DivisionProblem prob{ring, V_gens, F, RatPoly::constant(ring, Rat(1)), bound.rho};
        SolveOutcome out = solve_certificate(prob, opts.solve);
        if (std::holds_alternative<Certificate>(out)) {
            Certificate cert = std::get<Certificate>(std::move(out));
            cert.bound_trace = bound;
            cert.mu0_used = mu0;
            return cert;
        }
    }
    return NullsatzFailure{last_rho, opts.mu0_cap};
}

}  // namespace polycert
