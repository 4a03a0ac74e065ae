#pragma once

#include <complex>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "polycert/errors.hpp"
#include "polycert/monomial.hpp"
#include "polycert/order.hpp"
#include "polycert/rat.hpp"
#include "polycert/ring.hpp"

namespace polycert {

// Degree of the zero polynomial; keeps the degree-bound formulas total.
inline constexpr int kNegInfDegree = std::numeric_limits<int>::min();

// Sparse multivariate polynomial with exact rational coefficients.
// Invariants: no zero coefficients are stored; the zero polynomial has an
// empty term map. Immutable in spirit: all operations return new values.
class RatPoly {
public:
    using TermMap = std::map<Monomial, Rat>;

    explicit RatPoly(RingPtr ring) : ring_(std::move(ring)) {}
    RatPoly(RingPtr ring, TermMap terms);

    static RatPoly zero(RingPtr ring) { return RatPoly(std::move(ring)); }
    static RatPoly constant(RingPtr ring, const Rat& c);
    static RatPoly variable(RingPtr ring, std::size_t index, int power = 1);
    static RatPoly monomial(RingPtr ring, const Monomial& m, const Rat& c);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    // kNegInfDegree for the zero polynomial.
    int total_degree() const;
    bool is_homogeneous() const;
    bool is_constant() const;
    Rat coeff(const Monomial& m) const;
    Rat constant_coeff() const { return coeff(Monomial(ring_->size())); }

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator-() const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator*(const Rat& c) const;
    bool operator==(const RatPoly& o) const;
    bool operator!=(const RatPoly& o) const { return !(*this == o); }

    RatPoly derivative(std::size_t var) const;
    RatPoly pow(int k) const;

    // Largest term with respect to `ord`; polynomial must be nonzero.
    std::pair<Monomial, Rat> leading_term(MonoOrder ord) const;

    template <typename Scalar>
    Scalar evaluate(const std::vector<Scalar>& point) const {
        if (point.size() != ring_->size())
            throw std::invalid_argument("evaluate: wrong number of coordinates");
        Scalar acc{};
        for (const auto& [m, c] : terms_) {
            Scalar t{to_double(c)};
            for (std::size_t i = 0; i < m.e.size(); ++i)
                for (int k = 0; k < m.e[i]; ++k) t *= point[i];
            acc += t;
        }
        return acc;
    }

    std::string to_string() const;

private:
    void check_same_ring(const RatPoly& o) const;

    RingPtr ring_;
    TermMap terms_;
};

inline RatPoly operator*(const Rat& c, const RatPoly& p) { return p * c; }

// Lifts P (ring z') of degree <= target_degree to a form of exactly
// target_degree in (z0, z'): each term is padded with the new first variable.
// Setting the new variable to 1 recovers P.
RatPoly homogenize(const RatPoly& p, int target_degree, const std::string& new_var = "z0");

// Substitutes 1 for the first variable of a homogeneous polynomial and drops
// it from the ring. Throws std::invalid_argument if the input is not
// homogeneous.
RatPoly dehomogenize(const RatPoly& p);

// Homogenizes within the same ring layout decision as `homogenize` but keeps
// an already-built target ring (first variable is the homogenizing one).
RatPoly homogenize_into(const RatPoly& p, int target_degree, const RingPtr& target_ring);

}  // namespace polycert
