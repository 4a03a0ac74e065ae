#pragma once

#include "polycert/kernels/point.hpp"

namespace polycert::kernels {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline const Cx kTwoPiI = Cx(0.0, kTwoPi);

// The weight alpha = alpha_{0,0} + alpha_{1,1} with respect to O(1) and z:
//   alpha_{0,0} = (z . conj(zeta)) / |zeta|^2,
//   alpha_{1,1} = -dbar( conj(zeta).dzeta / (2 pi i |zeta|^2) ).
// Bundle weight (-1, +1); alpha_{0,0} equals 1 at zeta = z.
FormValue eval_alpha(const ChartPoint& z, const ChartPoint& zeta);

// b of minimal norm with delta_eta b = 1, and the full transposed-Cauchy
// kernel B = b + b^(dbar b) + ... + b^(dbar b)^{N-1}. Both carry bundle
// weight (0,0) in the L-grading; the (k,k-1) piece of B scales as the
// O_zeta(k) x O_z(-k)-valued form it is. Throws at zeta = z (pole).
std::pair<FormValue, FormValue> eval_b_B(const ChartPoint& z, const ChartPoint& zeta);

// Projective (1,0)-forms gamma_j = dzeta_j - (conj(zeta).dzeta/|zeta|^2) zeta_j,
// j = 0..N; each contracts to zero against zeta.
std::vector<FormValue> eval_gamma(const ChartPoint& zeta);

// Contraction with eta = 2 pi i sum z_i d/d(dzeta_i); preserves the bundle
// weight.
FormValue contract_eta(const FormValue& x, const ChartPoint& z);

// Plain Euler contractions used by projectivity checks.
FormValue contract_zeta(const FormValue& x, const ChartPoint& zeta);
FormValue contract_zeta_bar(const FormValue& x, const ChartPoint& zeta);

}  // namespace polycert::kernels
