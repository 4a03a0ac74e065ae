#include "polycert/kernels/form.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace polycert::kernels {

namespace {
inline int popcount(std::uint32_t x) { return std::popcount(x); }
}  // namespace

FormValue FormValue::scalar(int nvars, Cx value, BundleWeight w) {
    FormValue f(nvars, w);
    if (value != 0.0) f.terms_.push_back({pack(0, 0, 0), value});
    return f;
}

FormValue FormValue::d_holo(int nvars, int i, Cx coeff, BundleWeight w) {
    FormValue f(nvars, w);
    if (coeff != 0.0) f.terms_.push_back({pack(1u << i, 0, 0), coeff});
    return f;
}

FormValue FormValue::d_anti(int nvars, int i, Cx coeff, BundleWeight w) {
    FormValue f(nvars, w);
    if (coeff != 0.0) f.terms_.push_back({pack(0, 1u << i, 0), coeff});
    return f;
}

FormValue FormValue::e_vector(int nvars, int j, Cx coeff, BundleWeight w) {
    FormValue f(nvars, w);
    if (coeff != 0.0) f.terms_.push_back({pack(0, 0, 1u << j), coeff});
    return f;
}

bool FormValue::is_zero(double eps) const {
    for (const auto& t : terms_)
        if (std::abs(t.c) > eps) return false;
    return true;
}

void FormValue::check_compatible(const FormValue& o) const {
    if (nvars_ != o.nvars_) throw std::logic_error("FormValue: mixing different variable counts");
    if (!(weight_ == o.weight_)) throw std::logic_error("FormValue: adding different bundle weights");
}

void FormValue::add_term(std::uint32_t key, Cx c) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const Term& t, std::uint32_t k) { return t.key < k; });
    if (it != terms_.end() && it->key == key) {
        it->c += c;
        if (it->c == 0.0) terms_.erase(it);
    } else {
        terms_.insert(it, Term{key, c});
    }
}

FormValue& FormValue::operator+=(const FormValue& o) {
    check_compatible(o);
    for (const auto& t : o.terms_) add_term(t.key, t.c);
    return *this;
}

FormValue FormValue::operator+(const FormValue& o) const {
    FormValue r = *this;
    r += o;
    return r;
}

FormValue FormValue::operator-(const FormValue& o) const {
    FormValue r = *this;
    r += o * Cx(-1.0);
    return r;
}

FormValue FormValue::operator*(Cx c) const {
    FormValue r(nvars_, weight_);
    if (c == 0.0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.c *= c;
    return r;
}

int FormValue::cross_count(std::uint32_t x, std::uint32_t y) {
    int cnt = 0;
    while (y) {
        int j = std::countr_zero(y);
        cnt += popcount(x >> (j + 1));
        y &= y - 1;
    }
    return cnt;
}

int FormValue::merge_sign(std::uint32_t h1, std::uint32_t a1, std::uint32_t e1, std::uint32_t h2,
                          std::uint32_t a2, std::uint32_t e2) {
    int inv = cross_count(h1, h2) + cross_count(a1, a2) + cross_count(e1, e2) +
              popcount(a1) * popcount(h2) + popcount(e1) * (popcount(h2) + popcount(a2));
    return (inv & 1) ? -1 : 1;
}

FormValue FormValue::wedge(const FormValue& o) const {
    if (nvars_ != o.nvars_) throw std::logic_error("FormValue: mixing different variable counts");
    FormValue r(nvars_, weight_ + o.weight_);
    std::map<std::uint32_t, Cx> acc;
    for (const auto& s : terms_) {
        const std::uint32_t h1 = h_of(s.key), a1 = a_of(s.key), e1 = e_of(s.key);
        for (const auto& t : o.terms_) {
            const std::uint32_t h2 = h_of(t.key), a2 = a_of(t.key), e2 = e_of(t.key);
            if ((h1 & h2) || (a1 & a2) || (e1 & e2)) continue;
            const int sg = merge_sign(h1, a1, e1, h2, a2, e2);
            acc[pack(h1 | h2, a1 | a2, e1 | e2)] += static_cast<double>(sg) * s.c * t.c;
        }
    }
    r.terms_.reserve(acc.size());
    for (const auto& [k, c] : acc)
        if (c != 0.0) r.terms_.push_back({k, c});
    return r;
}

FormValue FormValue::pow_even(int k) const {
    if (k < 0) throw std::invalid_argument("pow_even: negative power");
    FormValue r = scalar(nvars_, 1.0, {});
    for (int i = 0; i < k; ++i) r = r.wedge(*this);
    return r;
}

FormValue FormValue::contract_holo(const std::vector<Cx>& vec, Cx scale, BundleWeight delta) const {
    FormValue r(nvars_, weight_ + delta);
    std::map<std::uint32_t, Cx> acc;
    for (const auto& t : terms_) {
        std::uint32_t h = h_of(t.key);
        std::uint32_t rest = h;
        while (rest) {
            int i = std::countr_zero(rest);
            rest &= rest - 1;
            const Cx v = scale * vec[static_cast<std::size_t>(i)];
            if (v == 0.0) continue;
            const int below = popcount(h & ((1u << i) - 1));
            const double sg = (below & 1) ? -1.0 : 1.0;
            acc[pack(h & ~(1u << i), a_of(t.key), e_of(t.key))] += sg * v * t.c;
        }
    }
    for (const auto& [k, c] : acc)
        if (c != 0.0) r.terms_.push_back({k, c});
    return r;
}

FormValue FormValue::contract_anti(const std::vector<Cx>& vec, Cx scale, BundleWeight delta) const {
    FormValue r(nvars_, weight_ + delta);
    std::map<std::uint32_t, Cx> acc;
    for (const auto& t : terms_) {
        const std::uint32_t h = h_of(t.key);
        std::uint32_t a = a_of(t.key);
        std::uint32_t rest = a;
        while (rest) {
            int i = std::countr_zero(rest);
            rest &= rest - 1;
            const Cx v = scale * vec[static_cast<std::size_t>(i)];
            if (v == 0.0) continue;
            const int below = popcount(h) + popcount(a & ((1u << i) - 1));
            const double sg = (below & 1) ? -1.0 : 1.0;
            acc[pack(h, a & ~(1u << i), e_of(t.key))] += sg * v * t.c;
        }
    }
    for (const auto& [k, c] : acc)
        if (c != 0.0) r.terms_.push_back({k, c});
    return r;
}

FormValue FormValue::contract_e(int j) const {
    FormValue r(nvars_, weight_);
    for (const auto& t : terms_) {
        const std::uint32_t e = e_of(t.key);
        if (!(e & (1u << j))) continue;
        const int below = popcount(h_of(t.key)) + popcount(a_of(t.key)) + popcount(e & ((1u << j) - 1));
        const double sg = (below & 1) ? -1.0 : 1.0;
        r.terms_.push_back({pack(h_of(t.key), a_of(t.key), e & ~(1u << j)), sg * t.c});
    }
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& x, const Term& y) { return x.key < y.key; });
    return r;
}

FormValue FormValue::bidegree(int p, int q) const {
    FormValue r(nvars_, weight_);
    for (const auto& t : terms_)
        if (popcount(h_of(t.key)) == p && popcount(a_of(t.key)) == q) r.terms_.push_back(t);
    return r;
}

FormValue FormValue::e_part(std::uint32_t emask) const {
    FormValue r(nvars_, weight_);
    for (const auto& t : terms_)
        if (e_of(t.key) == emask) r.terms_.push_back(t);
    return r;
}

Cx FormValue::coefficient(std::uint32_t h, std::uint32_t a, std::uint32_t e) const {
    const std::uint32_t key = pack(h, a, e);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const Term& t, std::uint32_t k) { return t.key < k; });
    return (it != terms_.end() && it->key == key) ? it->c : Cx(0.0);
}

FormValue FormValue::pullback(const std::vector<std::vector<Cx>>& jac, int nparams) const {
    FormValue out(nparams, weight_);
    std::map<std::uint32_t, Cx> acc;
    for (const auto& t : terms_) {
        FormValue factor = scalar(nparams, t.c, {});
        // expand holomorphic block in canonical (ascending) order
        std::uint32_t h = h_of(t.key);
        while (h && !factor.terms_.empty()) {
            int amb = std::countr_zero(h);
            h &= h - 1;
            FormValue one(nparams, {});
            for (int k = 0; k < nparams; ++k)
                if (jac[amb][k] != 0.0) one.add_term(pack(1u << k, 0, 0), jac[amb][k]);
            factor = factor.wedge(one);
        }
        std::uint32_t a = a_of(t.key);
        while (a && !factor.terms_.empty()) {
            int amb = std::countr_zero(a);
            a &= a - 1;
            FormValue one(nparams, {});
            for (int k = 0; k < nparams; ++k)
                if (jac[amb][k] != 0.0) one.add_term(pack(0, 1u << k, 0), std::conj(jac[amb][k]));
            factor = factor.wedge(one);
        }
        if (e_of(t.key) != 0) {
            FormValue evec(nparams, {});
            evec.terms_.push_back({pack(0, 0, e_of(t.key)), Cx(1.0)});
            factor = factor.wedge(evec);
        }
        for (const auto& ft : factor.terms_) acc[ft.key] += ft.c;
    }
    for (const auto& [k, c] : acc)
        if (c != 0.0) out.terms_.push_back({k, c});
    return out;
}

double FormValue::max_abs() const {
    double m = 0.0;
    for (const auto& t : terms_) m = std::max(m, std::abs(t.c));
    return m;
}

void FormValue::for_each(
    const std::function<void(std::uint32_t, std::uint32_t, std::uint32_t, Cx)>& fn) const {
    for (const auto& t : terms_) fn(h_of(t.key), a_of(t.key), e_of(t.key), t.c);
}

Cx FormValue::top_coefficient(int n, std::uint32_t emask) const {
    const std::uint32_t full = (1u << n) - 1;
    return coefficient(full, full, emask);
}

Cx measure_factor(int n) {
    Cx f(1.0, 0.0);
    for (int i = 0; i < n; ++i) f *= Cx(0.0, 2.0);
    if (((n * (n - 1) / 2) & 1) != 0) f = -f;
    return f;
}

}  // namespace polycert::kernels
