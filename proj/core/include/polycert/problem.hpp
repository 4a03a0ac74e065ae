#pragma once

#include <map>
#include <string>
#include <vector>

#include "polycert/parse.hpp"

namespace polycert {

// Text problem file:
//   ring x, y, z;
//   variety: x^2 - y;        (zero or more)
//   F: x;                    (one or more for division commands)
//   phi: x*y + 1;            (optional)
//   option key = value;      (zero or more)
// Statements end with ';'. '#' starts a comment until end of line.
struct ProblemFile {
    RingPtr ring;
    std::vector<RatPoly> variety;
    std::vector<RatPoly> F;
    std::vector<RatPoly> phi;  // zero or one entry
    std::map<std::string, std::string> options;

    bool has_phi() const { return !phi.empty(); }
};

// Throws ParseError; position() carries the 1-based line number.
ProblemFile parse_problem_file(const std::string& text);
ProblemFile load_problem_file(const std::string& path);

}  // namespace polycert
