#pragma once

#include <functional>
#include <string>

#include "polycert/kernels/form.hpp"

namespace polycert::kernels {

struct QuadratureConfig {
    int depth = 6;          // max refinement level
    double tol = 1e-8;      // relative convergence target between levels
    double lambda = 0.0;    // Koszul regularization exponent
    std::string charts = "auto";
    int min_depth = 2;
    unsigned threads = 1;   // cells are reduced in a fixed order regardless
    double min_f_norm = 1e-12;  // guard for division kernels
};

struct QuadratureResult {
    std::vector<Cx> values;
    double error_estimate = 0.0;
    long cells = 0;
    bool converged = false;

    Cx value() const { return values.empty() ? Cx(0.0) : values.front(); }
};

// Vector integrand over a union of parameter polydisks. eval(chart, s)
// returns the canonical top-form coefficients (one entry per component);
// the driver applies the complex measure factor and the polar Jacobian.
struct ChartedIntegrand {
    int nparams = 1;
    int ncomponents = 1;
    int ncharts = 1;
    std::function<std::vector<Cx>(int chart, const std::vector<Cx>& s)> eval;
};

// Composite Gauss-Legendre in polar coordinates per complex parameter with
// dyadic radial panels; refinement levels are compared for the error
// estimate and Aitken-accelerated when the ratio is stable.
QuadratureResult integrate(const ChartedIntegrand& f, const QuadratureConfig& cfg);

// Nodes of one refinement level over the unit disk: (s, weight) pairs with
// weight = r * w_r * w_theta (Lebesgue measure dx dy = r dr dtheta).
struct DiskRule {
    std::vector<Cx> nodes;
    std::vector<double> weights;

    static DiskRule level(int lvl);
};

}  // namespace polycert::kernels
