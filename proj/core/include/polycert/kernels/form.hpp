#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "polycert/rat.hpp"

namespace polycert::kernels {

using Cx = std::complex<double>;

// Line-bundle bidegree in the L-grading: a component of holomorphic degree p
// in dzeta scales as c^{zeta + p} under rescaling of the zeta lift and as
// c^{z - p} under rescaling of the z lift. Products add weights; the graded
// pieces of one value all share a single record.
struct BundleWeight {
    int zeta = 0;
    int z = 0;

    BundleWeight operator+(const BundleWeight& o) const { return {zeta + o.zeta, z + o.z}; }
    bool operator==(const BundleWeight& o) const { return zeta == o.zeta && z == o.z; }
};

// Element of the exterior algebra over d\zeta_0..d\zeta_{nv-1},
// conjugates, and Koszul frame vectors e_1..e_m, with complex coefficients.
// Terms are stored on the canonical basis
//   dz_{i1}^..^dz_{ip} ^ dzbar_{j1}^..^dzbar_{jq} ^ e_{k1}^..^e_{kr}
// with ascending indices inside each block.
class FormValue {
public:
    static constexpr int kMaxGens = 10;

    FormValue() = default;
    explicit FormValue(int nvars, BundleWeight w = {}) : nvars_(nvars), weight_(w) {}

    static FormValue scalar(int nvars, Cx value, BundleWeight w = {});
    // single holomorphic differential dzeta_i
    static FormValue d_holo(int nvars, int i, Cx coeff = 1.0, BundleWeight w = {});
    // single antiholomorphic differential
    static FormValue d_anti(int nvars, int i, Cx coeff = 1.0, BundleWeight w = {});
    // Koszul frame vector e_j (0-based)
    static FormValue e_vector(int nvars, int j, Cx coeff = 1.0, BundleWeight w = {});

    int nvars() const { return nvars_; }
    BundleWeight weight() const { return weight_; }
    FormValue& set_weight(BundleWeight w) {
        weight_ = w;
        return *this;
    }

    bool is_zero(double eps = 0.0) const;
    std::size_t term_count() const { return terms_.size(); }

    FormValue& operator+=(const FormValue& o);
    FormValue operator+(const FormValue& o) const;
    FormValue operator-(const FormValue& o) const;
    FormValue operator*(Cx c) const;
    FormValue wedge(const FormValue& o) const;
    FormValue pow_even(int k) const;  // wedge power; requires even total degree

    // Interior multiplication over the holomorphic slots by
    // scale * sum_i vec[i] d/d(dzeta_i), acting as a left antiderivation.
    // The caller states the resulting weight change.
    FormValue contract_holo(const std::vector<Cx>& vec, Cx scale, BundleWeight delta) const;
    FormValue contract_anti(const std::vector<Cx>& vec, Cx scale, BundleWeight delta) const;
    // Interior multiplication by e_j^* (left antiderivation on the e-block).
    FormValue contract_e(int j) const;

    // Graded part of bidegree (p, q) in (dzeta, dzetabar).
    FormValue bidegree(int p, int q) const;
    // Part with an exact e-monomial mask.
    FormValue e_part(std::uint32_t emask) const;
    Cx coefficient(std::uint32_t h, std::uint32_t a, std::uint32_t e) const;

    // Substitute dzeta_amb = sum_k jac[amb][k] ds_k (and conjugates) and
    // re-express on nparams generators. e-block passes through.
    FormValue pullback(const std::vector<std::vector<Cx>>& jac, int nparams) const;

    double max_abs() const;
    void for_each(const std::function<void(std::uint32_t h, std::uint32_t a, std::uint32_t e, Cx)>& fn) const;
    // Inserts c on the canonical basis element with the given block masks.
    void add_basis_term(std::uint32_t h, std::uint32_t a, std::uint32_t e, Cx c) {
        if (c != 0.0) add_term(pack(h, a, e), c);
    }

    // Top coefficient ds_1^..^ds_n ^ dsbar_1^..^dsbar_n of the e-component.
    Cx top_coefficient(int n, std::uint32_t emask = 0) const;

    static int cross_count(std::uint32_t x, std::uint32_t y);
    // Sign of the canonical reordering of (h1,a1,e1) ^ (h2,a2,e2); blocks
    // must be disjoint per slot.
    static int merge_sign(std::uint32_t h1, std::uint32_t a1, std::uint32_t e1, std::uint32_t h2,
                          std::uint32_t a2, std::uint32_t e2);

private:
    struct Term {
        std::uint32_t key;
        Cx c;
    };
    static std::uint32_t pack(std::uint32_t h, std::uint32_t a, std::uint32_t e) {
        return h | (a << kMaxGens) | (e << (2 * kMaxGens));
    }
    static std::uint32_t h_of(std::uint32_t key) { return key & ((1u << kMaxGens) - 1); }
    static std::uint32_t a_of(std::uint32_t key) { return (key >> kMaxGens) & ((1u << kMaxGens) - 1); }
    static std::uint32_t e_of(std::uint32_t key) { return key >> (2 * kMaxGens); }

    void add_term(std::uint32_t key, Cx c);
    void check_compatible(const FormValue& o) const;

    int nvars_ = 0;
    BundleWeight weight_{};
    std::vector<Term> terms_;  // sorted by key
};

inline FormValue operator*(Cx c, const FormValue& f) { return f * c; }

// Measure factor converting the canonical top coefficient to Lebesgue
// measure on C^n: ds^dsbar pairs contribute +2i each (the orientation pinned
// by the Fubini-Study mass-1 normalization), and the interleaving of the
// canonical order costs (-1)^{n(n-1)/2}.
Cx measure_factor(int n);

}  // namespace polycert::kernels
