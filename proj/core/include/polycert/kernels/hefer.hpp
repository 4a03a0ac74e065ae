#pragma once

#include "polycert/kernels/cfl.hpp"
#include "polycert/polynomial.hpp"

namespace polycert::kernels {

// Sign convention of the decomposition identity:
//   forward:  2 pi i sum (w_j - z_j) h_j = P(w) - P(z)
//   reversed: 2 pi i sum (w_j - z_j) h_j = P(z) - P(w)
enum class HeferSign { forward, reversed };

// Divided-difference decomposition of a homogeneous polynomial. The stored
// coefficient polynomials omit the 1/(2 pi i) factor, so the exact identity
//   sum_j (w_j - z_j) * h[j] = +-(P(w) - P(z))
// holds over Q; tau_substitute reinstates the scaling.
struct HeferData {
    RatPoly source;           // P in the zeta-ring
    RingPtr wz_ring;          // w0..wN, z0..zN
    std::vector<RatPoly> h;   // coefficient of dw_j
    HeferSign sign = HeferSign::forward;
};

// Telescoping construction: h_j is the divided difference of P between the
// mixed points (z_0..z_{j-1}, w_j..w_N) and (z_0..z_j, w_{j+1}..w_N).
HeferData hefer_decompose(const RatPoly& P, HeferSign sign);

// Exact symbolic check of the defining identity.
bool hefer_identity_holds(const HeferData& h);

// tau^* h: substitute w -> alpha zeta and dw_j -> gamma_j, expanding powers
// of alpha = alpha_{0,0} + alpha_{1,1} through the exterior algebra. The
// value is scaled by 1/(2 pi i) per the form normalization.
FormValue tau_substitute(const HeferData& h, const ChartPoint& z, const ChartPoint& zeta);

// nabla_eta(tau^* h), evaluated in closed form from nabla_eta gamma_j =
// 2 pi i (z_j - alpha zeta_j) and nabla_eta alpha = 0.
FormValue nabla_tau_substitute(const HeferData& h, const ChartPoint& z, const ChartPoint& zeta);

// tau^*(delta_{w-z} h) = +-(alpha^{deg P} P(zeta) - P(z)), the independent
// right-hand side of the tau identity.
FormValue tau_of_delta_h(const HeferData& h, const ChartPoint& z, const ChartPoint& zeta);

}  // namespace polycert::kernels
