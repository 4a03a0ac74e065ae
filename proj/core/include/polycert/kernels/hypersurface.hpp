#pragma once

#include "polycert/kernels/koszul.hpp"

namespace polycert::kernels {

// Omega = delta_zeta (dzeta_0 ^ ... ^ dzeta_{N}), the twisted volume form.
FormValue eval_omega_big(const ChartPoint& zeta);

// Chern-connection derivative Da = da - kappa0 (conj(zeta).dzeta/|zeta|^2) a.
FormValue eval_chern_da(const RatPoly& a, const ChartPoint& zeta);

// omega' = delta_A Omega, the hypersurface structure form, with delta_A the
// contraction by 2 pi i |da|^{-2} sum conj(d_j a) d/d(dzeta_j). When
// require_on_x is set, |a(zeta)| must be below on_x_tol (relative to the
// monomial scale). Throws std::domain_error at points with |da| below
// singular_tol.
FormValue eval_omega_prime(const RatPoly& a, const ChartPoint& zeta, double singular_tol = 1e-10,
                           bool require_on_x = false, double on_x_tol = 1e-8);

// theta extraction: the unique eta with eta ^ Omega = xi_{N,*}; valid for
// projective xi. Components of full holomorphic degree only.
FormValue theta(const FormValue& xi, const ChartPoint& zeta);

// Rational curve s -> [p_0(s) : ... : p_{n+1}(s)] covering a projective
// curve by the two parameter disks |s| <= 1 and |u| <= 1 with u = 1/s.
class RationalCurve {
public:
    explicit RationalCurve(std::vector<RatPoly> coords_in_s);

    int ambient_vars() const { return static_cast<int>(coords_.size()); }
    int degree() const { return degree_; }
    const std::vector<RatPoly>& coords() const { return coords_; }

    // Coordinates of the reversed parametrization u^D p(1/u).
    RationalCurve reversed() const;

    std::vector<Cx> point(Cx s) const;
    std::vector<Cx> tangent(Cx s) const;  // d/ds of each coordinate

    // Exact check that a vanishes identically along the curve.
    bool lies_on(const RatPoly& a) const;

private:
    std::vector<RatPoly> coords_;  // univariate in s
    int degree_ = 0;
};

}  // namespace polycert::kernels
