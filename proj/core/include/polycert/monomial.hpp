#pragma once

#include <algorithm>
#include <cassert>
#include <numeric>
#include <vector>

namespace polycert {

// Exponent vector; the length always matches the ambient ring's variable
// count. Comparison here is purely structural (container ordering) --
// semantic monomial orders live in order.hpp.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    std::size_t nvars() const { return e.size(); }
    int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
    bool is_unit() const {
        return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    }

    bool divides(const Monomial& o) const {
        assert(e.size() == o.e.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        assert(e.size() == o.e.size());
        Monomial r(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] + o.e[i];
        return r;
    }

    // Requires o.divides(*this).
    Monomial operator/(const Monomial& o) const {
        assert(o.divides(*this));
        Monomial r(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] - o.e[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        assert(a.e.size() == b.e.size());
        Monomial r(a.e.size());
        for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
    bool operator<(const Monomial& o) const { return e < o.e; }
};

}  // namespace polycert
