#include "polycert/kernels/cfl.hpp"

namespace polycert::kernels {

FormValue eval_alpha(const ChartPoint& z, const ChartPoint& zeta) {
    const int nv = zeta.nvars();
    if (z.nvars() != nv) throw std::invalid_argument("eval_alpha: dimension mismatch");
    const double zeta2 = zeta.norm2();
    const Cx z_dot_zetabar = hermitian_dot(z.coords, zeta.coords);

    FormValue alpha(nv, BundleWeight{-1, 1});
    alpha += FormValue::scalar(nv, z_dot_zetabar / zeta2, BundleWeight{-1, 1});
    // alpha_{1,1} = (1/2 pi i) sum_{j,k} M_{jk} dzeta_j ^ dzetabar_k with
    // M_{jk} = (delta_{jk} |zeta|^2 - conj(zeta_j) zeta_k) / |zeta|^4.
    FormValue a11(nv, BundleWeight{-1, 1});
    const double z4 = zeta2 * zeta2;
    for (int j = 0; j < nv; ++j) {
        for (int k = 0; k < nv; ++k) {
            Cx m = -std::conj(zeta.coords[j]) * zeta.coords[k] / z4;
            if (j == k) m += 1.0 / zeta2;
            if (m == 0.0) continue;
            a11 += FormValue::d_holo(nv, j, m / kTwoPiI, BundleWeight{-1, 1})
                       .wedge(FormValue::d_anti(nv, k, 1.0));
        }
    }
    alpha += a11;
    return alpha;
}

std::pair<FormValue, FormValue> eval_b_B(const ChartPoint& z, const ChartPoint& zeta) {
    const int nv = zeta.nvars();
    if (z.nvars() != nv) throw std::invalid_argument("eval_b_B: dimension mismatch");
    const int N = nv - 1;
    const double zeta2 = zeta.norm2();
    const double z2 = z.norm2();
    const Cx zetabar_dot_z = hermitian_dot(z.coords, zeta.coords);  // z . conj(zeta)
    const double D = zeta2 * z2 - std::norm(zetabar_dot_z);
    if (D <= 0.0) throw std::domain_error("eval_b_B: zeta equals z (pole of b)");

    // b = (1/2 pi i) [ |zeta|^2 conj(z).dzeta - (conj(z).zeta) conj(zeta).dzeta ] / D
    const Cx zbar_dot_zeta = std::conj(zetabar_dot_z);  // zeta . conj(z)
    FormValue b(nv, BundleWeight{0, 0});
    for (int j = 0; j < nv; ++j) {
        const Cx num = zeta2 * std::conj(z.coords[j]) - zbar_dot_zeta * std::conj(zeta.coords[j]);
        if (num == 0.0) continue;
        b += FormValue::d_holo(nv, j, num / (kTwoPiI * D), BundleWeight{0, 0});
    }

    // dbar b = (1/2 pi i) [ dbar(n)/D - dbar(D) ^ n / D^2 ] with
    // n = |zeta|^2 conj(z).dzeta - (conj(z).zeta) conj(zeta).dzeta,
    // dbar n = (zeta.dzetabar)^(conj(z).dzeta) - (conj(z).zeta) sum dzetabar_j^dzeta_j,
    // dbar D = |z|^2 (zeta.dzetabar) - (conj(z).zeta)(z.dzetabar).
    FormValue zeta_dot_dzetabar(nv, BundleWeight{0, 0});
    FormValue z_dot_dzetabar(nv, BundleWeight{0, 0});
    FormValue zbar_dot_dzeta(nv, BundleWeight{0, 0});
    FormValue zetabar_dot_dzeta(nv, BundleWeight{0, 0});
    FormValue sum_mixed(nv, BundleWeight{0, 0});  // sum_j dzetabar_j ^ dzeta_j
    for (int j = 0; j < nv; ++j) {
        zeta_dot_dzetabar += FormValue::d_anti(nv, j, zeta.coords[j]);
        z_dot_dzetabar += FormValue::d_anti(nv, j, z.coords[j]);
        zbar_dot_dzeta += FormValue::d_holo(nv, j, std::conj(z.coords[j]));
        zetabar_dot_dzeta += FormValue::d_holo(nv, j, std::conj(zeta.coords[j]));
        sum_mixed += FormValue::d_anti(nv, j, 1.0).wedge(FormValue::d_holo(nv, j, 1.0));
    }
    FormValue n_form = zbar_dot_dzeta * Cx(zeta2) - zetabar_dot_dzeta * zbar_dot_zeta;
    FormValue dbar_n = zeta_dot_dzetabar.wedge(zbar_dot_dzeta) - sum_mixed * zbar_dot_zeta;
    FormValue dbar_D = zeta_dot_dzetabar * Cx(z2) - z_dot_dzetabar * zbar_dot_zeta;
    FormValue dbar_b = (dbar_n * (1.0 / D) - dbar_D.wedge(n_form) * (1.0 / (D * D))) * (1.0 / kTwoPiI);

    FormValue B = b;
    FormValue term = b;
    for (int k = 2; k <= N; ++k) {
        term = term.wedge(dbar_b);
        B += term;
    }
    return {b, B};
}

std::vector<FormValue> eval_gamma(const ChartPoint& zeta) {
    const int nv = zeta.nvars();
    const double zeta2 = zeta.norm2();
    std::vector<FormValue> gamma;
    gamma.reserve(nv);
    for (int j = 0; j < nv; ++j) {
        FormValue g(nv, BundleWeight{0, 1});
        g += FormValue::d_holo(nv, j, 1.0, BundleWeight{0, 1});
        for (int k = 0; k < nv; ++k) {
            const Cx c = -std::conj(zeta.coords[k]) * zeta.coords[j] / zeta2;
            if (c != 0.0) g += FormValue::d_holo(nv, k, c, BundleWeight{0, 1});
        }
        gamma.push_back(std::move(g));
    }
    return gamma;
}

FormValue contract_eta(const FormValue& x, const ChartPoint& z) {
    return x.contract_holo(z.coords, kTwoPiI, BundleWeight{0, 0});
}

FormValue contract_zeta(const FormValue& x, const ChartPoint& zeta) {
    return x.contract_holo(zeta.coords, 1.0, BundleWeight{1, -1});
}

FormValue contract_zeta_bar(const FormValue& x, const ChartPoint& zeta) {
    std::vector<Cx> conj_coords(zeta.coords.size());
    for (std::size_t i = 0; i < conj_coords.size(); ++i) conj_coords[i] = std::conj(zeta.coords[i]);
    return x.contract_anti(conj_coords, 1.0, BundleWeight{0, 0});
}

}  // namespace polycert::kernels
