#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polycert {

// An ordered list of variable names. Polynomials hold a shared pointer to
// their ring; two rings are interchangeable when their variable lists match.
class Ring {
public:
    explicit Ring(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    std::size_t size() const { return vars_.size(); }
    const std::string& var(std::size_t i) const { return vars_[i]; }
    const std::vector<std::string>& vars() const { return vars_; }

    std::optional<std::size_t> index_of(std::string_view name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return i;
        return std::nullopt;
    }

    bool operator==(const Ring& o) const { return vars_ == o.vars_; }
    bool operator!=(const Ring& o) const { return !(*this == o); }

private:
    std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars) {
    return std::make_shared<const Ring>(std::move(vars));
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

}  // namespace polycert
