#include "polycert/polynomial.hpp"

#include <sstream>

namespace polycert {

Rat rat_from_string(const std::string& text) {
    Rat r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + text);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

int mono_cmp(const Monomial& a, const Monomial& b, MonoOrder ord) {
    const std::size_t n = a.e.size();
    switch (ord) {
        case MonoOrder::lex: {
            for (std::size_t i = 0; i < n; ++i)
                if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
            return 0;
        }
        case MonoOrder::grlex: {
            const int da = a.degree(), db = b.degree();
            if (da != db) return da > db ? 1 : -1;
            for (std::size_t i = 0; i < n; ++i)
                if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
            return 0;
        }
        case MonoOrder::grevlex: {
            const int da = a.degree(), db = b.degree();
            if (da != db) return da > db ? 1 : -1;
            // Equal degrees: the rightmost difference decides, reversed.
            for (std::size_t i = n; i-- > 0;)
                if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
            return 0;
        }
    }
    return 0;
}

std::string to_string(MonoOrder ord) {
    switch (ord) {
        case MonoOrder::grevlex: return "grevlex";
        case MonoOrder::grlex: return "grlex";
        case MonoOrder::lex: return "lex";
    }
    return "grevlex";
}

MonoOrder mono_order_from_string(const std::string& name) {
    if (name == "grevlex") return MonoOrder::grevlex;
    if (name == "grlex") return MonoOrder::grlex;
    if (name == "lex") return MonoOrder::lex;
    throw std::invalid_argument("unknown monomial order: " + name);
}

RatPoly::RatPoly(RingPtr ring, TermMap terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.nvars() != ring_->size())
            throw std::invalid_argument("monomial arity does not match ring");
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

RatPoly RatPoly::constant(RingPtr ring, const Rat& c) {
    RatPoly p(ring);
    if (c != 0) p.terms_.emplace(Monomial(ring->size()), c);
    return p;
}

RatPoly RatPoly::variable(RingPtr ring, std::size_t index, int power) {
    Monomial m(ring->size());
    m.e[index] = power;
    return monomial(std::move(ring), m, Rat(1));
}

RatPoly RatPoly::monomial(RingPtr ring, const Monomial& m, const Rat& c) {
    RatPoly p(std::move(ring));
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

int RatPoly::total_degree() const {
    if (terms_.empty()) return kNegInfDegree;
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool RatPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

bool RatPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rat RatPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void RatPoly::check_same_ring(const RatPoly& o) const {
    if (!same_ring(ring_, o.ring_)) throw RingMismatchError("operands live in different rings");
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    check_same_ring(o);
    RatPoly r(ring_);
    r.terms_ = terms_;
    for (const auto& [m, c] : o.terms_) {
        auto [it, inserted] = r.terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

RatPoly RatPoly::operator-() const {
    RatPoly r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator*(const RatPoly& o) const {
    check_same_ring(o);
    RatPoly r(ring_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma * mb;
            Rat c = ca * cb;
            auto [it, inserted] = r.terms_.emplace(std::move(m), c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    }
    return r;
}

RatPoly RatPoly::operator*(const Rat& c) const {
    RatPoly r(ring_);
    if (c == 0) return r;
    for (const auto& [m, a] : terms_) r.terms_.emplace(m, a * c);
    return r;
}

bool RatPoly::operator==(const RatPoly& o) const {
    return same_ring(ring_, o.ring_) && terms_ == o.terms_;
}

RatPoly RatPoly::derivative(std::size_t var) const {
    RatPoly r(ring_);
    for (const auto& [m, c] : terms_) {
        if (m.e[var] == 0) continue;
        Monomial d = m;
        d.e[var] -= 1;
        r.terms_.emplace(std::move(d), c * m.e[var]);
    }
    return r;
}

RatPoly RatPoly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    RatPoly r = constant(ring_, Rat(1));
    for (int i = 0; i < k; ++i) r = r * (*this);
    return r;
}

std::pair<Monomial, Rat> RatPoly::leading_term(MonoOrder ord) const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (mono_cmp(it->first, best->first, ord) > 0) best = it;
    return {best->first, best->second};
}

std::string RatPoly::to_string() const {
    if (terms_.empty()) return "0";
    // Print in descending grevlex for readability; format round-trips.
    std::vector<const TermMap::value_type*> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [](const auto* a, const auto* b) {
        return mono_cmp(a->first, b->first, MonoOrder::grevlex) > 0;
    });
    std::ostringstream out;
    bool first = true;
    for (const auto* t : ts) {
        Rat c = t->second;
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        std::string vars;
        for (std::size_t i = 0; i < t->first.e.size(); ++i) {
            const int e = t->first.e[i];
            if (e == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += ring_->var(i);
            if (e > 1) vars += "^" + std::to_string(e);
        }
        if (vars.empty()) {
            out << to_string(c);
        } else {
            if (c != 1) out << to_string(c) << "*";
            out << vars;
        }
    }
    return out.str();
}

RatPoly homogenize(const RatPoly& p, int target_degree, const std::string& new_var) {
    std::vector<std::string> vars;
    vars.reserve(p.ring()->size() + 1);
    vars.push_back(new_var);
    for (const auto& v : p.ring()->vars()) {
        if (v == new_var) throw std::invalid_argument("homogenize: variable name collision: " + new_var);
        vars.push_back(v);
    }
    return homogenize_into(p, target_degree, make_ring(std::move(vars)));
}

RatPoly homogenize_into(const RatPoly& p, int target_degree, const RingPtr& target_ring) {
    if (!p.is_zero() && target_degree < p.total_degree())
        throw std::invalid_argument("homogenize: target degree below polynomial degree");
    if (target_ring->size() != p.ring()->size() + 1)
        throw std::invalid_argument("homogenize: target ring must add one variable");
    RatPoly::TermMap terms;
    for (const auto& [m, c] : p.terms()) {
        Monomial h(target_ring->size());
        h.e[0] = target_degree - m.degree();
        for (std::size_t i = 0; i < m.e.size(); ++i) h.e[i + 1] = m.e[i];
        terms.emplace(std::move(h), c);
    }
    return RatPoly(target_ring, std::move(terms));
}

RatPoly dehomogenize(const RatPoly& p) {
    if (!p.is_homogeneous()) throw std::invalid_argument("dehomogenize: input is not homogeneous");
    if (p.ring()->size() < 1) throw std::invalid_argument("dehomogenize: empty ring");
    std::vector<std::string> vars(p.ring()->vars().begin() + 1, p.ring()->vars().end());
    RingPtr ring = make_ring(std::move(vars));
    RatPoly::TermMap terms;
    for (const auto& [m, c] : p.terms()) {
        Monomial d(ring->size());
        for (std::size_t i = 1; i < m.e.size(); ++i) d.e[i - 1] = m.e[i];
        auto [it, inserted] = terms.emplace(std::move(d), c);
        if (!inserted) it->second += c;
    }
    return RatPoly(ring, std::move(terms));
}

}  // namespace polycert
