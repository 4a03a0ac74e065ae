#include "polycert/kernels/quadrature.hpp"

#include <cmath>
#include <future>
#include <stdexcept>

namespace polycert::kernels {

namespace {

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (t * p1 - p0) / (t * t - 1.0);
            double dt = p1 / dp;
            t -= dt;
            if (std::abs(dt) < 1e-15) break;
        }
        x[i] = t;
        double p0 = 1.0, p1 = t;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (t * p1 - p0) / (t * t - 1.0);
        w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
}

constexpr int kRadialOrder = 8;

}  // namespace

DiskRule DiskRule::level(int lvl) {
    DiskRule rule;
    std::vector<double> gx, gw;
    gauss_legendre(kRadialOrder, gx, gw);

    // Dyadic radial panels [2^-(l+1), 2^-l] plus the center [0, 2^-lvl].
    std::vector<std::pair<double, double>> panels;
    double hi = 1.0;
    for (int l = 0; l < lvl; ++l) {
        panels.emplace_back(hi / 2.0, hi);
        hi /= 2.0;
    }
    panels.emplace_back(0.0, hi);

    const int ntheta = 4 * (lvl + 2);
    std::vector<double> tx, tw;
    gauss_legendre(ntheta, tx, tw);

    for (const auto& [r0, r1] : panels) {
        for (int i = 0; i < kRadialOrder; ++i) {
            const double r = 0.5 * (r1 - r0) * gx[i] + 0.5 * (r1 + r0);
            const double wr = 0.5 * (r1 - r0) * gw[i];
            for (int j = 0; j < ntheta; ++j) {
                const double th = M_PI * tx[j] + M_PI;  // [0, 2 pi]
                const double wth = M_PI * tw[j];
                rule.nodes.push_back(Cx(r * std::cos(th), r * std::sin(th)));
                rule.weights.push_back(r * wr * wth);
            }
        }
    }
    return rule;
}

namespace {

std::vector<Cx> evaluate_level(const ChartedIntegrand& f, int lvl, unsigned threads, long* cells) {
    const DiskRule rule = DiskRule::level(lvl);
    const std::size_t nn = rule.nodes.size();
    const Cx measure = measure_factor(f.nparams);

    // Deterministic enumeration of the tensor nodes per chart. Work is split
    // into contiguous blocks whose partial sums are reduced in index order,
    // so the result does not depend on the thread count.
    std::size_t total = 1;
    for (int k = 0; k < f.nparams; ++k) total *= nn;

    auto eval_range = [&](int chart, std::size_t begin, std::size_t end) {
        std::vector<Cx> acc(f.ncomponents, Cx(0.0));
        std::vector<Cx> s(f.nparams);
        for (std::size_t flat = begin; flat < end; ++flat) {
            std::size_t rest = flat;
            double w = 1.0;
            for (int k = 0; k < f.nparams; ++k) {
                const std::size_t idx = rest % nn;
                rest /= nn;
                s[k] = rule.nodes[idx];
                w *= rule.weights[idx];
            }
            std::vector<Cx> v = f.eval(chart, s);
            for (int c = 0; c < f.ncomponents; ++c) acc[c] += v[c] * w;
        }
        return acc;
    };

    std::vector<Cx> out(f.ncomponents, Cx(0.0));
    for (int chart = 0; chart < f.ncharts; ++chart) {
        if (threads <= 1 || total < 1024) {
            std::vector<Cx> acc = eval_range(chart, 0, total);
            for (int c = 0; c < f.ncomponents; ++c) out[c] += acc[c];
        } else {
            const unsigned nblocks = threads * 4;
            const std::size_t chunk = (total + nblocks - 1) / nblocks;
            std::vector<std::future<std::vector<Cx>>> futures;
            for (std::size_t b = 0, begin = 0; begin < total; ++b, begin += chunk) {
                const std::size_t end = std::min(total, begin + chunk);
                futures.push_back(
                    std::async(std::launch::async, [&, chart, begin, end] { return eval_range(chart, begin, end); }));
            }
            for (auto& fu : futures) {
                std::vector<Cx> acc = fu.get();
                for (int c = 0; c < f.ncomponents; ++c) out[c] += acc[c];
            }
        }
        if (cells) *cells += static_cast<long>(total);
    }
    for (auto& v : out) v *= measure;
    return out;
}

double vec_dist(const std::vector<Cx>& a, const std::vector<Cx>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

double vec_scale(const std::vector<Cx>& a) {
    double m = 0.0;
    for (const auto& v : a) m = std::max(m, std::abs(v));
    return std::max(m, 1.0);
}

}  // namespace

QuadratureResult integrate(const ChartedIntegrand& f, const QuadratureConfig& cfg) {
    QuadratureResult res;
    std::vector<std::vector<Cx>> levels;
    for (int lvl = std::max(1, cfg.min_depth); lvl <= std::max(1, cfg.depth); ++lvl) {
        levels.push_back(evaluate_level(f, lvl, cfg.threads, &res.cells));
        const std::size_t n = levels.size();
        if (n >= 2) {
            const double diff = vec_dist(levels[n - 1], levels[n - 2]);
            res.error_estimate = diff;
            if (diff <= cfg.tol * vec_scale(levels[n - 1])) {
                res.converged = true;
                break;
            }
        }
    }
    res.values = levels.back();

    // One Aitken step per component when the refinement ratio is stable.
    if (levels.size() >= 3) {
        const auto& v0 = levels[levels.size() - 3];
        const auto& v1 = levels[levels.size() - 2];
        const auto& v2 = levels[levels.size() - 1];
        for (std::size_t c = 0; c < res.values.size(); ++c) {
            const Cx d1 = v1[c] - v0[c];
            const Cx d2 = v2[c] - v1[c];
            const Cx denom = d2 - d1;
            if (std::abs(denom) > 1e-14 && std::abs(d2) < 0.5 * std::abs(d1)) {
                res.values[c] = v2[c] - d2 * d2 / denom;
            }
        }
        res.error_estimate = std::min(res.error_estimate, vec_dist(res.values, v2));
    }
    return res;
}

}  // namespace polycert::kernels
