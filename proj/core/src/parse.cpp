#include "polycert/parse.hpp"

#include <cctype>

namespace polycert {

namespace {

class Scanner {
public:
    Scanner(const std::string& text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

    RatPoly parse() {
        RatPoly acc = RatPoly::zero(ring_);
        skip_ws();
        if (at_end()) throw ParseError(pos_, "empty polynomial");
        bool negative = false;
        if (peek() == '+' || peek() == '-') negative = (take() == '-');
        acc = acc + parse_term(negative);
        skip_ws();
        while (!at_end()) {
            char op = peek();
            if (op != '+' && op != '-')
                throw ParseError(pos_, std::string("expected '+' or '-', found '") + op + "'");
            take();
            acc = acc + parse_term(op == '-');
            skip_ws();
        }
        return acc;
    }

private:
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return text_[pos_];
    }
    char take() {
        skip_ws();
        return text_[pos_++];
    }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string read_integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError(pos_, "expected an integer");
        return text_.substr(start, pos_ - start);
    }

    Rat read_rational() {
        std::string num = read_integer();
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            std::string den = read_integer();
            if (Int(den) == 0) throw ParseError(pos_, "zero denominator");
            return make_rat(Int(num), Int(den));
        }
        return Rat(Int(num));
    }

    std::size_t read_variable() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (pos_ == start) throw ParseError(pos_, "expected a variable name");
        std::string name = text_.substr(start, pos_ - start);
        auto idx = ring_->index_of(name);
        if (!idx) throw ParseError(start, "unknown variable '" + name + "'");
        return *idx;
    }

    RatPoly parse_term(bool negative) {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError(pos_, "expected a term");
        Rat coeff(1);
        Monomial mono(ring_->size());
        bool have_factor = false;

        if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            coeff = read_rational();
            have_factor = true;
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                read_factors(mono);
            }
        } else {
            read_factors(mono);
            have_factor = true;
        }
        if (!have_factor) throw ParseError(pos_, "expected a term");
        if (negative) coeff = -coeff;
        return RatPoly::monomial(ring_, mono, coeff);
    }

    void read_factors(Monomial& mono) {
        while (true) {
            skip_ws();
            if (pos_ >= text_.size() || !(std::isalpha(static_cast<unsigned char>(text_[pos_])) ||
                                          text_[pos_] == '_'))
                throw ParseError(pos_, "expected a variable name");
            std::size_t var = read_variable();
            int exp = 1;
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '^') {
                ++pos_;
                std::string e = read_integer();
                exp = std::stoi(e);
            }
            mono.e[var] += exp;
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                continue;
            }
            break;
        }
    }

    const std::string& text_;
    RingPtr ring_;
    std::size_t pos_ = 0;
};

}  // namespace

RatPoly parse_poly(const std::string& text, const RingPtr& ring) {
    return Scanner(text, ring).parse();
}

}  // namespace polycert
