#include "polycert/kernels/hefer.hpp"

#include <map>

namespace polycert::kernels {

namespace {

// Image of p under the positional variable map src var i -> target var map[i].
RatPoly rename_into(const RatPoly& p, const RingPtr& target, const std::vector<std::size_t>& map) {
    RatPoly::TermMap terms;
    for (const auto& [m, c] : p.terms()) {
        Monomial t(target->size());
        for (std::size_t i = 0; i < m.e.size(); ++i) t.e[map[i]] += m.e[i];
        terms.emplace(std::move(t), c);
    }
    return RatPoly(target, std::move(terms));
}

// Quotient of P(.., w_j, ..) - P(.., z_j, ..) by (w_j - z_j): replaces each
// w_j^k by w_j^{k-1} + w_j^{k-2} z_j + ... + z_j^{k-1} in the w_j-expansion.
RatPoly divided_difference(const RatPoly& mixed, std::size_t wj, std::size_t zj) {
    const RingPtr& ring = mixed.ring();
    RatPoly out = RatPoly::zero(ring);
    for (const auto& [m, c] : mixed.terms()) {
        const int k = m.e[wj];
        if (k == 0) continue;  // constant in w_j: cancels in the difference
        Monomial base = m;
        base.e[wj] = 0;
        for (int i = 0; i < k; ++i) {
            Monomial t = base;
            t.e[wj] = i;
            t.e[zj] += k - 1 - i;
            out = out + RatPoly::monomial(ring, t, c);
        }
    }
    return out;
}

}  // namespace

HeferData hefer_decompose(const RatPoly& P, HeferSign sign) {
    if (!P.is_homogeneous()) throw std::invalid_argument("hefer_decompose: P must be homogeneous");
    const std::size_t nv = P.ring()->size();
    std::vector<std::string> names;
    names.reserve(2 * nv);
    for (std::size_t i = 0; i < nv; ++i) names.push_back("w" + std::to_string(i));
    for (std::size_t i = 0; i < nv; ++i) names.push_back("z" + std::to_string(i));
    RingPtr wz = make_ring(std::move(names));

    HeferData data;
    data.source = P;
    data.wz_ring = wz;
    data.sign = sign;
    data.h.reserve(nv);
    for (std::size_t j = 0; j < nv; ++j) {
        // P evaluated at (z_0..z_{j-1}, w_j, w_{j+1}..): vars < j to z-side.
        std::vector<std::size_t> map(nv);
        for (std::size_t i = 0; i < nv; ++i) map[i] = i < j ? nv + i : i;
        RatPoly mixed = rename_into(P, wz, map);
        RatPoly q = divided_difference(mixed, j, nv + j);
        if (sign == HeferSign::reversed) q = -q;
        data.h.push_back(std::move(q));
    }
    return data;
}

bool hefer_identity_holds(const HeferData& h) {
    const RingPtr& wz = h.wz_ring;
    const std::size_t nv = h.source.ring()->size();
    RatPoly acc = RatPoly::zero(wz);
    for (std::size_t j = 0; j < nv; ++j) {
        RatPoly lin = RatPoly::variable(wz, j) - RatPoly::variable(wz, nv + j);
        acc = acc + lin * h.h[j];
    }
    std::vector<std::size_t> to_w(nv), to_z(nv);
    for (std::size_t i = 0; i < nv; ++i) {
        to_w[i] = i;
        to_z[i] = nv + i;
    }
    RatPoly diff = rename_into(h.source, wz, to_w) - rename_into(h.source, wz, to_z);
    if (h.sign == HeferSign::reversed) diff = -diff;
    return acc == diff;
}

namespace {

// Evaluates one Hefer coefficient under tau: groups the terms of h_j by
// w-degree a and anti-degree... each monomial c w^beta z^gamma becomes
// c zeta^beta z^gamma alpha^{|beta|}.
FormValue tau_coefficient(const RatPoly& hj, const FormValue& alpha, const ChartPoint& z,
                          const ChartPoint& zeta, int source_degree) {
    const int nv = zeta.nvars();
    std::map<int, Cx> by_power;
    for (const auto& [m, c] : hj.terms()) {
        Cx v = to_double(c);
        int wdeg = 0;
        for (int i = 0; i < nv; ++i) {
            for (int k = 0; k < m.e[i]; ++k) v *= zeta.coords[i];
            wdeg += m.e[i];
        }
        for (int i = 0; i < nv; ++i)
            for (int k = 0; k < m.e[nv + i]; ++k) v *= z.coords[i];
        by_power[wdeg] += v;
    }
    // Every monomial has |beta| + |gamma| = deg P - 1; splitting by |beta|
    // keeps the bundle weight (0, deg P - 1) uniform.
    FormValue out(nv, BundleWeight{0, source_degree - 1});
    for (const auto& [p, v] : by_power) {
        if (v == 0.0) continue;
        FormValue t = alpha.pow_even(p) * v;
        t.set_weight(BundleWeight{0, source_degree - 1});
        out += t;
    }
    return out;
}

}  // namespace

FormValue tau_substitute(const HeferData& h, const ChartPoint& z, const ChartPoint& zeta) {
    const int nv = zeta.nvars();
    if (static_cast<std::size_t>(nv) != h.source.ring()->size())
        throw std::invalid_argument("tau_substitute: dimension mismatch");
    const int degP = std::max(h.source.total_degree(), 0);
    const FormValue alpha = eval_alpha(z, zeta);
    const std::vector<FormValue> gamma = eval_gamma(zeta);
    FormValue out(nv, BundleWeight{0, degP});
    for (int j = 0; j < nv; ++j) {
        if (h.h[j].is_zero()) continue;
        FormValue cj = tau_coefficient(h.h[j], alpha, z, zeta, degP);
        out += cj.wedge(gamma[j]) * (1.0 / kTwoPiI);
    }
    return out;
}

FormValue nabla_tau_substitute(const HeferData& h, const ChartPoint& z, const ChartPoint& zeta) {
    const int nv = zeta.nvars();
    const int degP = std::max(h.source.total_degree(), 0);
    const FormValue alpha = eval_alpha(z, zeta);
    FormValue out(nv, BundleWeight{0, degP});
    for (int j = 0; j < nv; ++j) {
        if (h.h[j].is_zero()) continue;
        FormValue cj = tau_coefficient(h.h[j], alpha, z, zeta, degP);
        // nabla_eta gamma_j = 2 pi i (z_j - alpha zeta_j); the 2 pi i cancels
        // the form normalization of tau^*.
        FormValue lin = FormValue::scalar(nv, z.coords[j], BundleWeight{0, 1}) -
                        (alpha * zeta.coords[j]).set_weight(BundleWeight{0, 1});
        out += cj.wedge(lin);
    }
    return out;
}

FormValue tau_of_delta_h(const HeferData& h, const ChartPoint& z, const ChartPoint& zeta) {
    const int nv = zeta.nvars();
    const int degP = std::max(h.source.total_degree(), 0);
    const FormValue alpha = eval_alpha(z, zeta);
    std::vector<Cx> zc(zeta.coords);
    const Cx p_zeta = h.source.evaluate(zc);
    std::vector<Cx> zz(z.coords);
    const Cx p_z = h.source.evaluate(zz);
    FormValue out = alpha.pow_even(degP) * p_zeta;
    out.set_weight(BundleWeight{0, degP});
    out += FormValue::scalar(nv, -p_z, BundleWeight{0, degP});
    if (h.sign == HeferSign::reversed) out = out * Cx(-1.0);
    return out;
}

}  // namespace polycert::kernels
