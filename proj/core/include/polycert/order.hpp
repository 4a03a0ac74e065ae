#pragma once

#include <string>

#include "polycert/monomial.hpp"

namespace polycert {

enum class MonoOrder { grevlex, grlex, lex };

// Three-way comparison: negative if a < b, 0 if equal, positive if a > b.
int mono_cmp(const Monomial& a, const Monomial& b, MonoOrder ord);

inline bool mono_less(const Monomial& a, const Monomial& b, MonoOrder ord) {
    return mono_cmp(a, b, ord) < 0;
}

std::string to_string(MonoOrder ord);
MonoOrder mono_order_from_string(const std::string& name);

}  // namespace polycert
