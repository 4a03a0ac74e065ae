#pragma once

#include "polycert/kernels/hefer.hpp"

namespace polycert::kernels {

// Pointwise values of the regularized Koszul machinery of a tuple f of
// common-degree-d homogeneous polynomials at zeta:
//   sigma  = sum conj(f_j) e_j / |f|^2
//   U[k-1] = |f|^{2 lambda} conj(f).e ^ (dbar conj(f).e)^{k-1} / |f|^{2k}
//   R[0]   = 1 - |f|^{2 lambda}           (scalar part)
//   R[k]   = dbar|f|^{2 lambda} ^ u_k
// with the metric norm |f|^2 = sum |f_j|^2 / |zeta|^{2d}. At lambda = 0 the
// U parts are the plain Koszul forms and every R part vanishes off Z_f.
struct KoszulForms {
    FormValue sigma;
    std::vector<FormValue> U;  // k = 1..kmax
    std::vector<FormValue> R;  // index 0 = scalar part, then k = 1..kmax
    double f_norm2 = 0.0;      // metric norm squared at zeta
    int degree = 0;
};

// kmax defaults to min(m, N+1). Throws std::domain_error when lambda = 0 and
// f vanishes at zeta.
KoszulForms eval_koszul(const std::vector<RatPoly>& f, const ChartPoint& zeta, double lambda,
                        int kmax = -1);

// delta_h x = sum_j h_j ^ (e_j^* -| x) for the tuple h of odd-degree forms.
FormValue delta_h_apply(const std::vector<FormValue>& h, const FormValue& x);
// (delta_h)^r / r! applied to x.
FormValue delta_h_power(const std::vector<FormValue>& h, const FormValue& x, int r);

// (H^f_kappa)^l_k applied to the Koszul basis vector e_J (|J| = k):
// alpha^{kappa - d k} (delta_h)_{k-l} e_J. Requires kappa >= d k.
FormValue eval_hefer_koszul(const std::vector<HeferData>& h_tuple, int k, int l, int kappa, int d,
                            const ChartPoint& z, const ChartPoint& zeta, std::uint32_t e_mask);

}  // namespace polycert::kernels
