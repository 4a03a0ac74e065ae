#pragma once

#include "polycert/kernels/hypersurface.hpp"
#include "polycert/kernels/quadrature.hpp"

namespace polycert::kernels {

struct RepresentResult {
    Cx value{};
    double error_estimate = 0.0;
    long cells = 0;
    bool converged = false;
};

// phi(z) = int_{P^N} (alpha^{l+N})_{N,N} phi for homogeneous phi of degree l
// (phi as a section of O(l+N) (x) O(-N)). alpha_power overrides the default
// weight exponent l+N; it must keep the integrand at zeta-weight 0.
RepresentResult represent_pn(const RatPoly& phi, const ChartPoint& z, const QuadratureConfig& cfg,
                             int alpha_power = -1);

// phi(z) = (-1)^{n+1} int_X theta(alpha^{l-k0+n+1} ^ h^a) ^ omega' phi on the
// rational curve X = {a = 0} in P^{n+1}; requires l >= k0 - n - 1.
RepresentResult represent_hypersurface(const RatPoly& phi, const RatPoly& a, const ChartPoint& z,
                                       const RationalCurve& curve, const QuadratureConfig& cfg,
                                       int alpha_power = -1);

// Same value through the contraction route -int_X delta_A(h^a ^ g) phi;
// algebraic cross-check of the theta/omega' path.
RepresentResult represent_hypersurface_via_delta(const RatPoly& phi, const RatPoly& a,
                                                 const ChartPoint& z, const RationalCurve& curve,
                                                 const QuadratureConfig& cfg, int alpha_power = -1);

struct DivisionEvalResult {
    std::vector<Cx> q;
    double error_estimate = 0.0;
    long cells = 0;
    bool converged = false;
};

// Koszul division kernel on X = P^N (J_X = 0): the tuple q with
// sum_j f_j(z) q_j(z) = phi(z) whenever the residue term vanishes
// (Z_f empty; requires rho >= d k - N for every k <= min(m, N+1)).
DivisionEvalResult division_eval_pn(const std::vector<RatPoly>& f, const RatPoly& phi,
                                    const ChartPoint& z, int rho, const QuadratureConfig& cfg);

// Division kernel on the hypersurface X = {a = 0} along a rational curve:
//   q = sum_k (-1)^{n+1} int_X theta[alpha^{rho-k0+n+1-dk} ^ (delta_h)_{k-1}
//         u_k ^ h^a] ^ omega' phi.
// Requires Z_f on X empty for exactness at lambda = 0 (|f| is guarded by
// cfg.min_f_norm) and rho >= d k + k0 - n - 1 for every k <= min(m, n+1).
DivisionEvalResult division_eval_hypersurface(const std::vector<RatPoly>& f, const RatPoly& phi,
                                              const RatPoly& a, const ChartPoint& z, int rho,
                                              const RationalCurve& curve,
                                              const QuadratureConfig& cfg);

// Max |d q_j / d conj(s)| at the curve parameter s_z by central differences;
// small values certify holomorphy of z -> q(z) along X.
double division_holomorphy_defect(const std::vector<RatPoly>& f, const RatPoly& phi,
                                  const RatPoly& a, Cx s_z, int rho, const RationalCurve& curve,
                                  const QuadratureConfig& cfg, double h = 1e-3);

}  // namespace polycert::kernels
