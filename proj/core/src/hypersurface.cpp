#include "polycert/kernels/hypersurface.hpp"

#include <cmath>

namespace polycert::kernels {

FormValue eval_omega_big(const ChartPoint& zeta) {
    const int nv = zeta.nvars();
    FormValue vol = FormValue::scalar(nv, 1.0, BundleWeight{0, 0});
    for (int i = 0; i < nv; ++i) vol = vol.wedge(FormValue::d_holo(nv, i, 1.0));
    // delta_zeta changes the base weight by (+1, -1); declare Omega's total
    // as (1, N) per the L-grading of a (N,0)-form valued in O(N+1).
    FormValue omega = vol.contract_holo(zeta.coords, 1.0, BundleWeight{1, -1});
    omega.set_weight(BundleWeight{1, nv - 1});
    return omega;
}

FormValue eval_chern_da(const RatPoly& a, const ChartPoint& zeta) {
    const int nv = zeta.nvars();
    const int kappa0 = a.total_degree();
    const double zeta2 = zeta.norm2();
    const Cx a_val = a.evaluate(zeta.coords);
    FormValue da(nv, BundleWeight{kappa0 - 1, 1});
    for (int i = 0; i < nv; ++i) {
        Cx c = a.derivative(i).evaluate(zeta.coords);
        c -= kappa0 * std::conj(zeta.coords[i]) * a_val / zeta2;
        if (c != 0.0) da += FormValue::d_holo(nv, i, c, BundleWeight{kappa0 - 1, 1});
    }
    return da;
}

FormValue eval_omega_prime(const RatPoly& a, const ChartPoint& zeta, double singular_tol,
                           bool require_on_x, double on_x_tol) {
    if (!a.is_homogeneous()) throw std::invalid_argument("eval_omega_prime: a must be homogeneous");
    const int nv = zeta.nvars();
    const int kappa0 = a.total_degree();
    if (static_cast<int>(a.ring()->size()) != nv)
        throw std::invalid_argument("eval_omega_prime: dimension mismatch");

    std::vector<Cx> grad(nv);
    double grad2 = 0.0;
    for (int i = 0; i < nv; ++i) {
        grad[i] = a.derivative(i).evaluate(zeta.coords);
        grad2 += std::norm(grad[i]);
    }
    const double scale = std::pow(std::sqrt(zeta.norm2()), kappa0 - 1);
    if (std::sqrt(grad2) < singular_tol * scale)
        throw std::domain_error("eval_omega_prime: singular point of {a = 0}");
    if (require_on_x) {
        const Cx a_val = a.evaluate(zeta.coords);
        if (std::abs(a_val) > on_x_tol * scale * std::sqrt(zeta.norm2()))
            throw std::domain_error("eval_omega_prime: point is not on {a = 0}");
    }

    std::vector<Cx> conj_grad(nv);
    for (int i = 0; i < nv; ++i) conj_grad[i] = std::conj(grad[i]);
    FormValue omega = eval_omega_big(zeta);
    // delta_A: lose one dzeta and a holomorphic weight kappa0 - 1.
    return omega.contract_holo(conj_grad, kTwoPiI / grad2, BundleWeight{1 - kappa0, -1});
}

FormValue theta(const FormValue& xi, const ChartPoint& zeta) {
    const int nv = zeta.nvars();
    const int N = nv - 1;
    int jstar = 0;
    for (int i = 1; i < nv; ++i)
        if (std::abs(zeta.coords[i]) > std::abs(zeta.coords[jstar])) jstar = i;
    const std::uint32_t target_h = ((1u << nv) - 1) & ~(1u << jstar);
    const Cx denom = ((jstar & 1) ? -1.0 : 1.0) * zeta.coords[jstar];

    FormValue out(nv, xi.weight() + BundleWeight{-1, -N});
    xi.for_each([&](std::uint32_t h, std::uint32_t a, std::uint32_t e, Cx c) {
        if (h != target_h) return;
        // (dzetabar_J ^ e_K) ^ dzeta_I = s * dzeta_I ^ dzetabar_J ^ e_K
        const int bits = std::popcount(a) + std::popcount(e);
        const double s = ((N * bits) & 1) ? -1.0 : 1.0;
        out.add_basis_term(0, a, e, c * s / denom);
    });
    return out;
}

RationalCurve::RationalCurve(std::vector<RatPoly> coords_in_s) : coords_(std::move(coords_in_s)) {
    if (coords_.size() < 2) throw std::invalid_argument("RationalCurve: need at least 2 coordinates");
    const RingPtr ring = coords_.front().ring();
    if (ring->size() != 1) throw std::invalid_argument("RationalCurve: coordinates must be univariate");
    for (const auto& p : coords_) {
        if (!same_ring(p.ring(), ring)) throw RingMismatchError("RationalCurve: mixed rings");
        degree_ = std::max(degree_, p.total_degree());
    }
    bool nonzero = false;
    for (const auto& p : coords_) nonzero = nonzero || !p.is_zero();
    if (!nonzero) throw std::invalid_argument("RationalCurve: zero parametrization");
}

RationalCurve RationalCurve::reversed() const {
    const RingPtr ring = coords_.front().ring();
    std::vector<RatPoly> rev;
    rev.reserve(coords_.size());
    for (const auto& p : coords_) {
        RatPoly::TermMap terms;
        for (const auto& [m, c] : p.terms()) {
            Monomial t(1);
            t.e[0] = degree_ - m.e[0];
            terms.emplace(std::move(t), c);
        }
        rev.push_back(RatPoly(ring, std::move(terms)));
    }
    return RationalCurve(std::move(rev));
}

std::vector<Cx> RationalCurve::point(Cx s) const {
    std::vector<Cx> out;
    out.reserve(coords_.size());
    const std::vector<Cx> arg{s};
    for (const auto& p : coords_) out.push_back(p.evaluate(arg));
    return out;
}

std::vector<Cx> RationalCurve::tangent(Cx s) const {
    std::vector<Cx> out;
    out.reserve(coords_.size());
    const std::vector<Cx> arg{s};
    for (const auto& p : coords_) out.push_back(p.derivative(0).evaluate(arg));
    return out;
}

bool RationalCurve::lies_on(const RatPoly& a) const {
    if (a.ring()->size() != coords_.size())
        throw std::invalid_argument("RationalCurve::lies_on: dimension mismatch");
    const RingPtr sring = coords_.front().ring();
    RatPoly acc = RatPoly::zero(sring);
    for (const auto& [m, c] : a.terms()) {
        RatPoly term = RatPoly::constant(sring, c);
        for (std::size_t i = 0; i < coords_.size(); ++i)
            for (int k = 0; k < m.e[i]; ++k) term = term * coords_[i];
        acc = acc + term;
    }
    return acc.is_zero();
}

}  // namespace polycert::kernels
