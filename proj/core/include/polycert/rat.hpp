#pragma once

#include <gmpxx.h>

#include <string>

namespace polycert {

// Exact arithmetic scalars. Rat is always kept canonical by GMP:
// gcd(|num|, den) = 1 and den > 0.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p" or "p/q" with optional sign.
Rat rat_from_string(const std::string& text);

std::string to_string(const Rat& r);

inline double to_double(const Rat& r) { return r.get_d(); }

}  // namespace polycert
