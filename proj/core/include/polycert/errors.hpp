#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polycert {

// Syntax error in polynomial or problem-file text. `position` is a byte
// offset into the parsed string; problem files report line numbers instead.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& what)
        : std::runtime_error("parse error at position " + std::to_string(position) + ": " + what),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class RingMismatchError : public std::invalid_argument {
public:
    explicit RingMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace polycert
