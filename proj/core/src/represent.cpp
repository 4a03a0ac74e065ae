#include "polycert/kernels/represent.hpp"

#include <cmath>

namespace polycert::kernels {

namespace {

double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Lift of the j-th standard chart of P^N at parameters s: zeta_j = 1 and the
// remaining coordinates take the s-values in index order.
std::vector<Cx> pn_chart_lift(int nv, int chart, const std::vector<Cx>& s) {
    std::vector<Cx> zeta(nv);
    int k = 0;
    for (int i = 0; i < nv; ++i) zeta[i] = (i == chart) ? Cx(1.0) : s[k++];
    return zeta;
}

std::vector<std::vector<Cx>> pn_chart_jacobian(int nv, int chart) {
    std::vector<std::vector<Cx>> jac(nv, std::vector<Cx>(nv - 1, Cx(0.0)));
    int k = 0;
    for (int i = 0; i < nv; ++i) {
        if (i == chart) continue;
        jac[i][k++] = Cx(1.0);
    }
    return jac;
}

void check_zeta_weight(const BundleWeight& w, int expected_zeta, const char* where) {
    if (w.zeta != expected_zeta)
        throw std::logic_error(std::string(where) + ": integrand zeta-weight " +
                               std::to_string(w.zeta) + " != " + std::to_string(expected_zeta) +
                               "; the assembled kernel is not lift-invariant");
}

RepresentResult from_quadrature(const QuadratureResult& q) {
    RepresentResult r;
    r.value = q.value();
    r.error_estimate = q.error_estimate;
    r.cells = q.cells;
    r.converged = q.converged;
    return r;
}

}  // namespace

RepresentResult represent_pn(const RatPoly& phi, const ChartPoint& z, const QuadratureConfig& cfg,
                             int alpha_power) {
    if (!phi.is_homogeneous()) throw std::invalid_argument("represent_pn: phi must be homogeneous");
    const int nv = static_cast<int>(phi.ring()->size());
    if (z.nvars() != nv) throw std::invalid_argument("represent_pn: dimension mismatch");
    const int N = nv - 1;
    const int l = std::max(phi.total_degree(), 0);
    const int P = alpha_power < 0 ? l + N : alpha_power;
    // Structural weight check: base zeta-weight of alpha^P phi must be -N.
    check_zeta_weight(BundleWeight{-P + l, P}, -N, "represent_pn");

    ChartedIntegrand f;
    f.nparams = N;
    f.ncomponents = 1;
    f.ncharts = nv;
    f.eval = [&, nv, N, P](int chart, const std::vector<Cx>& s) {
        const std::vector<Cx> lift = pn_chart_lift(nv, chart, s);
        const ChartPoint zeta = ChartPoint::raw(lift);
        const FormValue alpha = eval_alpha(z, zeta);
        // (alpha^P)_{N,N} = C(P,N) alpha00^{P-N} alpha11^N
        const Cx a00 = alpha.coefficient(0, 0, 0);
        FormValue top = alpha.bidegree(1, 1).pow_even(N) *
                        (binom(P, N) * std::pow(a00, static_cast<double>(P - N)));
        const Cx phival = phi.evaluate(zeta.coords);
        const FormValue pulled = top.pullback(pn_chart_jacobian(nv, chart), N);
        return std::vector<Cx>{pulled.top_coefficient(N) * phival};
    };
    if (P < N) {
        // weight has no (N,N) part; the representation integral is zero
        RepresentResult r;
        return r;
    }
    return from_quadrature(integrate(f, cfg));
}

namespace {

struct CurveCharts {
    const RationalCurve* primary;
    RationalCurve reversed;

    explicit CurveCharts(const RationalCurve& c) : primary(&c), reversed(c.reversed()) {}

    const RationalCurve& chart(int i) const { return i == 0 ? *primary : reversed; }
};

std::vector<std::vector<Cx>> curve_jacobian(const RationalCurve& c, Cx s) {
    const std::vector<Cx> t = c.tangent(s);
    std::vector<std::vector<Cx>> jac(t.size(), std::vector<Cx>(1));
    for (std::size_t i = 0; i < t.size(); ++i) jac[i][0] = t[i];
    return jac;
}

}  // namespace

RepresentResult represent_hypersurface(const RatPoly& phi, const RatPoly& a, const ChartPoint& z,
                                       const RationalCurve& curve, const QuadratureConfig& cfg,
                                       int alpha_power) {
    if (!phi.is_homogeneous() || !a.is_homogeneous())
        throw std::invalid_argument("represent_hypersurface: inputs must be homogeneous");
    const int nv = curve.ambient_vars();
    const int n = nv - 2;
    const int kappa0 = a.total_degree();
    const int l = std::max(phi.total_degree(), 0);
    const int P = alpha_power < 0 ? l - kappa0 + n + 1 : alpha_power;
    if (P < 0)
        throw std::invalid_argument("represent_hypersurface: needs deg phi >= kappa0 - n - 1");
    if (!curve.lies_on(a))
        throw std::invalid_argument("represent_hypersurface: the curve does not lie on {a = 0}");

    const HeferData ha = hefer_decompose(a, HeferSign::reversed);
    const double n1sign = ((n + 1) & 1) ? -1.0 : 1.0;
    CurveCharts charts(curve);

    ChartedIntegrand f;
    f.nparams = 1;
    f.ncomponents = 1;
    f.ncharts = 2;
    f.eval = [&, nv, n, P, n1sign](int chart, const std::vector<Cx>& s) {
        const RationalCurve& c = charts.chart(chart);
        const ChartPoint zeta = ChartPoint::raw(c.point(s[0]));
        const FormValue alpha = eval_alpha(z, zeta);
        const FormValue g = alpha.pow_even(P);
        const FormValue ha_form = tau_substitute(ha, z, zeta);
        const FormValue xi = g.wedge(ha_form);
        const FormValue th = theta(xi, zeta);
        const FormValue wprime = eval_omega_prime(a, zeta);
        FormValue integrand = th.wedge(wprime) * (n1sign * phi.evaluate(zeta.coords));
        check_zeta_weight(integrand.weight() + BundleWeight{l, 0}, -n, "represent_hypersurface");
        const FormValue pulled = integrand.pullback(curve_jacobian(c, s[0]), 1);
        return std::vector<Cx>{pulled.top_coefficient(1)};
    };
    return from_quadrature(integrate(f, cfg));
}

RepresentResult represent_hypersurface_via_delta(const RatPoly& phi, const RatPoly& a,
                                                 const ChartPoint& z, const RationalCurve& curve,
                                                 const QuadratureConfig& cfg, int alpha_power) {
    if (!phi.is_homogeneous() || !a.is_homogeneous())
        throw std::invalid_argument("represent_hypersurface: inputs must be homogeneous");
    const int nv = curve.ambient_vars();
    const int n = nv - 2;
    const int kappa0 = a.total_degree();
    const int l = std::max(phi.total_degree(), 0);
    const int P = alpha_power < 0 ? l - kappa0 + n + 1 : alpha_power;
    if (P < 0)
        throw std::invalid_argument("represent_hypersurface: needs deg phi >= kappa0 - n - 1");

    const HeferData ha = hefer_decompose(a, HeferSign::reversed);
    CurveCharts charts(curve);

    ChartedIntegrand f;
    f.nparams = 1;
    f.ncomponents = 1;
    f.ncharts = 2;
    f.eval = [&, nv, P](int chart, const std::vector<Cx>& s) {
        const RationalCurve& c = charts.chart(chart);
        const ChartPoint zeta = ChartPoint::raw(c.point(s[0]));
        const FormValue alpha = eval_alpha(z, zeta);
        const FormValue ha_form = tau_substitute(ha, z, zeta);
        // -delta_A(h^a ^ g) phi
        std::vector<Cx> grad(nv);
        double grad2 = 0.0;
        for (int i = 0; i < nv; ++i) {
            grad[i] = std::conj(a.derivative(i).evaluate(zeta.coords));
            grad2 += std::norm(grad[i]);
        }
        const FormValue prod = ha_form.wedge(alpha.pow_even(P));
        const int kap = a.total_degree();
        FormValue integrand =
            prod.contract_holo(grad, kTwoPiI / grad2, BundleWeight{1 - kap, -1}) *
            Cx(-phi.evaluate(zeta.coords));
        const FormValue pulled = integrand.pullback(curve_jacobian(c, s[0]), 1);
        return std::vector<Cx>{pulled.top_coefficient(1)};
    };
    return from_quadrature(integrate(f, cfg));
}

DivisionEvalResult division_eval_pn(const std::vector<RatPoly>& f, const RatPoly& phi,
                                    const ChartPoint& z, int rho, const QuadratureConfig& cfg) {
    if (f.empty()) throw std::invalid_argument("division_eval_pn: empty tuple");
    const int nv = static_cast<int>(f.front().ring()->size());
    const int N = nv - 1;
    const int m = static_cast<int>(f.size());
    const int d = f.front().total_degree();
    const int kmax = std::min(m, N + 1);
    for (int k = 1; k <= kmax; ++k)
        if (rho + N - d * k < 0)
            throw std::invalid_argument("division_eval_pn: rho below the kernel degree window");

    std::vector<HeferData> hf;
    hf.reserve(f.size());
    for (const auto& fj : f) hf.push_back(hefer_decompose(fj, HeferSign::forward));

    ChartedIntegrand integrand;
    integrand.nparams = N;
    integrand.ncomponents = m;
    integrand.ncharts = nv;
    integrand.eval = [&, nv, N, m, d, kmax, rho](int chart, const std::vector<Cx>& s) {
        const ChartPoint zeta = ChartPoint::raw(pn_chart_lift(nv, chart, s));
        const KoszulForms kf = eval_koszul(f, zeta, cfg.lambda, kmax);
        if (kf.f_norm2 < cfg.min_f_norm * cfg.min_f_norm)
            throw std::domain_error("division_eval_pn: |f| below threshold (common zero nearby?)");
        const FormValue alpha = eval_alpha(z, zeta);
        std::vector<FormValue> h;
        h.reserve(hf.size());
        for (const auto& hd : hf) h.push_back(tau_substitute(hd, z, zeta));

        // Every k-term carries the same weight (-rho-N, rho+N-d).
        FormValue total(nv, BundleWeight{-rho - N, rho + N - d});
        for (int k = 1; k <= kmax; ++k) {
            FormValue t = delta_h_power(h, kf.U[k - 1], k - 1);
            total += alpha.pow_even(rho + N - d * k).wedge(t);
        }
        // phi enters as a plain scalar; account for its zeta-weight here.
        check_zeta_weight(total.weight() + BundleWeight{rho, 0}, -N, "division_eval_pn");
        const Cx phival = phi.evaluate(zeta.coords);
        const FormValue pulled = total.pullback(pn_chart_jacobian(nv, chart), N);
        std::vector<Cx> out(m);
        for (int j = 0; j < m; ++j)
            out[j] = pulled.top_coefficient(N, 1u << j) * phival;
        return out;
    };

    QuadratureResult qr = integrate(integrand, cfg);
    DivisionEvalResult res;
    res.q = qr.values;
    res.error_estimate = qr.error_estimate;
    res.cells = qr.cells;
    res.converged = qr.converged;
    return res;
}

DivisionEvalResult division_eval_hypersurface(const std::vector<RatPoly>& f, const RatPoly& phi,
                                              const RatPoly& a, const ChartPoint& z, int rho,
                                              const RationalCurve& curve,
                                              const QuadratureConfig& cfg) {
    if (f.empty()) throw std::invalid_argument("division_eval_hypersurface: empty tuple");
    const int nv = curve.ambient_vars();
    const int n = nv - 2;
    const int m = static_cast<int>(f.size());
    const int d = f.front().total_degree();
    const int kappa0 = a.total_degree();
    const int kmax = std::min(m, n + 1);
    for (int k = 1; k <= kmax; ++k)
        if (rho - kappa0 + n + 1 - d * k < 0)
            throw std::invalid_argument("division_eval_hypersurface: rho below the kernel window");
    if (!curve.lies_on(a))
        throw std::invalid_argument("division_eval_hypersurface: curve does not lie on {a = 0}");

    std::vector<HeferData> hf;
    hf.reserve(f.size());
    for (const auto& fj : f) hf.push_back(hefer_decompose(fj, HeferSign::forward));
    const HeferData ha = hefer_decompose(a, HeferSign::reversed);
    const double n1sign = ((n + 1) & 1) ? -1.0 : 1.0;
    CurveCharts charts(curve);

    ChartedIntegrand integrand;
    integrand.nparams = 1;
    integrand.ncomponents = m;
    integrand.ncharts = 2;
    integrand.eval = [&, nv, n, m, d, kmax, rho, n1sign](int chart, const std::vector<Cx>& s) {
        const RationalCurve& c = charts.chart(chart);
        const ChartPoint zeta = ChartPoint::raw(c.point(s[0]));
        const KoszulForms kf = eval_koszul(f, zeta, cfg.lambda, kmax);
        if (kf.f_norm2 < cfg.min_f_norm * cfg.min_f_norm)
            throw std::domain_error("division_eval_hypersurface: |f| below threshold on X");
        const FormValue alpha = eval_alpha(z, zeta);
        const FormValue ha_form = tau_substitute(ha, z, zeta);
        const FormValue wprime = eval_omega_prime(a, zeta);
        std::vector<FormValue> h;
        h.reserve(hf.size());
        for (const auto& hd : hf) h.push_back(tau_substitute(hd, z, zeta));

        const Cx phival = phi.evaluate(zeta.coords);
        std::vector<Cx> out(m, Cx(0.0));
        for (int k = 1; k <= kmax; ++k) {
            FormValue t = delta_h_power(h, kf.U[k - 1], k - 1);
            t = alpha.pow_even(rho - kappa0 + n + 1 - d * k).wedge(t).wedge(ha_form);
            FormValue th = theta(t, zeta);
            FormValue piece = th.wedge(wprime) * (n1sign * phival);
            check_zeta_weight(piece.weight() + BundleWeight{rho, 0}, -n,
                              "division_eval_hypersurface");
            const FormValue pulled = piece.pullback(curve_jacobian(c, s[0]), 1);
            for (int j = 0; j < m; ++j) out[j] += pulled.top_coefficient(1, 1u << j);
        }
        return out;
    };

    QuadratureResult qr = integrate(integrand, cfg);
    DivisionEvalResult res;
    res.q = qr.values;
    res.error_estimate = qr.error_estimate;
    res.cells = qr.cells;
    res.converged = qr.converged;
    return res;
}

double division_holomorphy_defect(const std::vector<RatPoly>& f, const RatPoly& phi,
                                  const RatPoly& a, Cx s_z, int rho, const RationalCurve& curve,
                                  const QuadratureConfig& cfg, double h) {
    // Fix one chart at the center so the local frame of the O(rho-d)-valued
    // q is holomorphic across all four finite-difference evaluations.
    const ChartPoint center = ChartPoint::from_homogeneous(curve.point(s_z));
    const int chart = center.chart;
    auto q_at = [&](Cx s) {
        std::vector<Cx> lift = curve.point(s);
        const Cx scale = lift[chart];
        for (auto& c : lift) c /= scale;
        ChartPoint z;
        z.coords = std::move(lift);
        z.chart = chart;
        return division_eval_hypersurface(f, phi, a, z, rho, curve, cfg).q;
    };
    const std::vector<Cx> qe = q_at(s_z + h);
    const std::vector<Cx> qw = q_at(s_z - h);
    const std::vector<Cx> qn = q_at(s_z + Cx(0, h));
    const std::vector<Cx> qs = q_at(s_z - Cx(0, h));
    double defect = 0.0;
    for (std::size_t j = 0; j < qe.size(); ++j) {
        // d/d conj(s) = (d/dx + i d/dy) / 2
        const Cx dx = (qe[j] - qw[j]) / (2 * h);
        const Cx dy = (qn[j] - qs[j]) / (2 * h);
        defect = std::max(defect, std::abs(0.5 * (dx + Cx(0, 1) * dy)));
    }
    return defect;
}

}  // namespace polycert::kernels
