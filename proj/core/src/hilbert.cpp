#include "polycert/resolution.hpp"

namespace polycert {

namespace {

// Coefficients of the polynomial C(t + a, n) in t, degree n, over Q.
std::vector<Rat> binomial_poly(int a, int n) {
    std::vector<Rat> coeffs{Rat(1)};  // constant 1
    for (int r = 0; r < n; ++r) {
        // multiply by (t + a - r)
        std::vector<Rat> next(coeffs.size() + 1, Rat(0));
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] += coeffs[i];
            next[i] += coeffs[i] * Rat(a - r);
        }
        coeffs = std::move(next);
    }
    Int fact(1);
    for (int r = 2; r <= n; ++r) fact *= r;
    for (auto& c : coeffs) c /= Rat(fact);
    return coeffs;
}

}  // namespace

HilbertData hilbert_data(const Resolution& res) {
    const int N = static_cast<int>(res.ring->size()) - 1;
    std::vector<Rat> H = binomial_poly(N, N);  // k = 0 term, d_0 = 0
    int sign = -1;
    for (int k = 1; k <= res.length; ++k) {
        for (int d : res.d(k)) {
            std::vector<Rat> term = binomial_poly(N - d, N);
            for (std::size_t i = 0; i < term.size(); ++i) H[i] += Rat(sign) * term[i];
        }
        sign = -sign;
    }
    HilbertData data;
    int deg = -1;
    for (int i = static_cast<int>(H.size()) - 1; i >= 0; --i) {
        if (H[i] != 0) {
            deg = i;
            break;
        }
    }
    data.dimension = deg;
    if (deg >= 0) {
        Rat lead = H[deg];
        Int fact(1);
        for (int r = 2; r <= deg; ++r) fact *= r;
        Rat degree = lead * Rat(fact);
        if (degree.get_den() != 1)
            throw std::logic_error("Hilbert polynomial leading term is not integral");
        data.degree = degree.get_num().get_si();
    }
    return data;
}

}  // namespace polycert
