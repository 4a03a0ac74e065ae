#pragma once

#include <vector>

#include "polycert/polynomial.hpp"

namespace polycert {

// Buchberger-complete, inter-reduced, monic basis. Generators are sorted by
// ascending leading term so equal ideals produce identical bases.
struct GroebnerBasis {
    RingPtr ring;
    std::vector<RatPoly> gens;
    MonoOrder order = MonoOrder::grevlex;

    bool empty() const { return gens.empty(); }
};

GroebnerBasis groebner_basis(const std::vector<RatPoly>& ideal, MonoOrder order = MonoOrder::grevlex);

// Remainder of full multivariate division: no term of the result is
// divisible by any basis leading term. Zero iff p lies in the ideal.
RatPoly normal_form(const RatPoly& p, const GroebnerBasis& gb);

bool in_ideal(const RatPoly& p, const GroebnerBasis& gb);

// Every S-polynomial reduces to zero. Test oracle; quadratic in basis size.
bool is_groebner(const std::vector<RatPoly>& gens, MonoOrder order);

// True iff the homogeneous ideal contains a power of every variable, i.e.
// its projective zero set is empty (the quotient has finite dimension, so
// every variable has a pure power among the leading terms).
bool projective_zero_set_empty(const std::vector<RatPoly>& homogeneous_gens,
                               MonoOrder order = MonoOrder::grevlex);

}  // namespace polycert
