#include "polycert/kernels/koszul.hpp"

#include <cmath>

namespace polycert::kernels {

KoszulForms eval_koszul(const std::vector<RatPoly>& f, const ChartPoint& zeta, double lambda,
                        int kmax) {
    if (f.empty()) throw std::invalid_argument("eval_koszul: empty tuple");
    const int nv = zeta.nvars();
    const int m = static_cast<int>(f.size());
    const int d = f.front().total_degree();
    for (const auto& fj : f) {
        if (!fj.is_homogeneous() || fj.total_degree() != d)
            throw std::invalid_argument("eval_koszul: tuple must be homogeneous of one degree");
        if (static_cast<int>(fj.ring()->size()) != nv)
            throw std::invalid_argument("eval_koszul: dimension mismatch");
    }
    if (kmax < 0) kmax = std::min(m, nv);

    std::vector<Cx> fv(m);
    std::vector<std::vector<Cx>> df(m, std::vector<Cx>(nv));
    double plain_norm2 = 0.0;
    for (int j = 0; j < m; ++j) {
        fv[j] = f[j].evaluate(zeta.coords);
        plain_norm2 += std::norm(fv[j]);
        for (int i = 0; i < nv; ++i) df[j][i] = f[j].derivative(i).evaluate(zeta.coords);
    }
    const double zeta2 = zeta.norm2();
    const double metric_norm2 = plain_norm2 / std::pow(zeta2, d);
    if (lambda == 0.0 && plain_norm2 == 0.0)
        throw std::domain_error("eval_koszul: f vanishes at zeta and lambda = 0");

    KoszulForms out;
    out.f_norm2 = metric_norm2;
    out.degree = d;

    // conj(f).e and dbar conj(f).e = sum_j conj(df_j).dzetabar ^ e_j
    FormValue fbar_e(nv, BundleWeight{0, 0});
    FormValue dfbar_e(nv, BundleWeight{0, 0});
    for (int j = 0; j < m; ++j) {
        fbar_e += FormValue::e_vector(nv, j, std::conj(fv[j]));
        FormValue oneform(nv, BundleWeight{0, 0});
        for (int i = 0; i < nv; ++i)
            if (df[j][i] != 0.0) oneform += FormValue::d_anti(nv, i, std::conj(df[j][i]));
        dfbar_e += oneform.wedge(FormValue::e_vector(nv, j, 1.0));
    }

    out.sigma = (fbar_e * (1.0 / plain_norm2)).set_weight(BundleWeight{-d, 0});

    const double s = metric_norm2;
    const double s_lambda = lambda == 0.0 ? 1.0 : std::pow(s, lambda);

    FormValue wedge_acc = fbar_e;
    std::vector<FormValue> u;
    for (int k = 1; k <= kmax; ++k) {
        FormValue uk = wedge_acc * (1.0 / std::pow(plain_norm2, k));
        uk.set_weight(BundleWeight{-d * k, 0});
        u.push_back(uk);
        out.U.push_back(uk * s_lambda);
        out.U.back().set_weight(BundleWeight{-d * k, 0});
        if (k < kmax) wedge_acc = wedge_acc.wedge(dfbar_e);
    }

    // R parts: 1 - |f|^{2 lambda} and dbar|f|^{2 lambda} ^ u_k with
    // dbar|f|^2_metric = [sum_j f_j conj(df_j).dzetabar]/|zeta|^{2d}
    //                    - d |f|^2_metric (zeta.dzetabar)/|zeta|^2.
    out.R.push_back(FormValue::scalar(nv, 1.0 - s_lambda, BundleWeight{0, 0}));
    FormValue dbar_metric(nv, BundleWeight{0, 0});
    const double pow_zeta2d = std::pow(zeta2, d);
    for (int i = 0; i < nv; ++i) {
        Cx c = 0.0;
        for (int j = 0; j < m; ++j) c += fv[j] * std::conj(df[j][i]);
        c /= pow_zeta2d;
        c -= d * s * zeta.coords[i] / zeta2;
        if (c != 0.0) dbar_metric += FormValue::d_anti(nv, i, c);
    }
    const double dpow = lambda == 0.0 ? 0.0 : lambda * std::pow(s, lambda - 1.0);
    for (int k = 1; k <= kmax; ++k) {
        FormValue rk = (dbar_metric * dpow).wedge(u[k - 1]);
        rk.set_weight(BundleWeight{-d * k, 0});
        out.R.push_back(std::move(rk));
    }
    return out;
}

FormValue delta_h_apply(const std::vector<FormValue>& h, const FormValue& x) {
    FormValue acc(x.nvars(), x.weight() + h.front().weight());
    for (std::size_t j = 0; j < h.size(); ++j) {
        FormValue contracted = x.contract_e(static_cast<int>(j));
        if (contracted.is_zero()) continue;
        FormValue piece = h[j].wedge(contracted);
        acc += piece;
    }
    return acc;
}

FormValue delta_h_power(const std::vector<FormValue>& h, const FormValue& x, int r) {
    FormValue acc = x;
    double factorial = 1.0;
    for (int i = 1; i <= r; ++i) {
        acc = delta_h_apply(h, acc);
        factorial *= i;
    }
    return acc * (1.0 / factorial);
}

FormValue eval_hefer_koszul(const std::vector<HeferData>& h_tuple, int k, int l, int kappa, int d,
                            const ChartPoint& z, const ChartPoint& zeta, std::uint32_t e_mask) {
    if (kappa < d * k) throw std::invalid_argument("eval_hefer_koszul: kappa < d*k");
    if (k < l) throw std::invalid_argument("eval_hefer_koszul: k < l gives the zero morphism");
    const int nv = zeta.nvars();
    std::vector<FormValue> h;
    h.reserve(h_tuple.size());
    for (const auto& hd : h_tuple) h.push_back(tau_substitute(hd, z, zeta));

    FormValue basis = FormValue::scalar(nv, 1.0, BundleWeight{-d * k, 0});
    std::uint32_t mask = e_mask;
    int count = 0;
    while (mask) {
        int j = std::countr_zero(mask);
        mask &= mask - 1;
        basis = basis.wedge(FormValue::e_vector(nv, j, 1.0));
        ++count;
    }
    if (count != k) throw std::invalid_argument("eval_hefer_koszul: |e_mask| != k");

    FormValue result = delta_h_power(h, basis, k - l);
    const FormValue alpha = eval_alpha(z, zeta);
    return alpha.pow_even(kappa - d * k).wedge(result);
}

}  // namespace polycert::kernels
