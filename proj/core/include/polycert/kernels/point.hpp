#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "polycert/kernels/form.hpp"

namespace polycert::kernels {

// A point of P^N given by a homogeneous lift with one coordinate pinned to 1.
struct ChartPoint {
    std::vector<Cx> coords;
    int chart = 0;

    static ChartPoint from_affine(int chart, int nvars, const std::vector<Cx>& affine) {
        if (static_cast<int>(affine.size()) != nvars - 1)
            throw std::invalid_argument("ChartPoint: wrong affine coordinate count");
        ChartPoint p;
        p.chart = chart;
        p.coords.reserve(nvars);
        int k = 0;
        for (int i = 0; i < nvars; ++i) p.coords.push_back(i == chart ? Cx(1.0) : affine[k++]);
        return p;
    }

    // Arbitrary lift; used inside integrators where the integrand is
    // lift-invariant and the differentials must match the lift.
    static ChartPoint raw(std::vector<Cx> v) {
        ChartPoint p;
        int best = 0;
        for (std::size_t i = 1; i < v.size(); ++i)
            if (std::abs(v[i]) > std::abs(v[best])) best = static_cast<int>(i);
        p.coords = std::move(v);
        p.chart = best;
        return p;
    }

    // Normalizes by the coordinate of largest modulus.
    static ChartPoint from_homogeneous(std::vector<Cx> v) {
        int best = 0;
        for (std::size_t i = 1; i < v.size(); ++i)
            if (std::abs(v[i]) > std::abs(v[best])) best = static_cast<int>(i);
        if (v[best] == 0.0) throw std::invalid_argument("ChartPoint: zero vector");
        const Cx scale = v[best];
        for (auto& c : v) c /= scale;
        ChartPoint p;
        p.coords = std::move(v);
        p.chart = best;
        return p;
    }

    int nvars() const { return static_cast<int>(coords.size()); }

    double norm2() const {
        double s = 0;
        for (const auto& c : coords) s += std::norm(c);
        return s;
    }
};

inline Cx hermitian_dot(const std::vector<Cx>& x, const std::vector<Cx>& ybar_of) {
    // sum x_i * conj(y_i)
    Cx s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * std::conj(ybar_of[i]);
    return s;
}

}  // namespace polycert::kernels
