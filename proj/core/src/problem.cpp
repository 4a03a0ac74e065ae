#include "polycert/problem.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace polycert {

namespace {

std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(strip(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(strip(cur));
    return parts;
}

}  // namespace

ProblemFile parse_problem_file(const std::string& text) {
    ProblemFile pf;

    // Collect ';'-terminated statements, remembering the line each starts on.
    std::vector<std::pair<std::size_t, std::string>> stmts;
    std::string cur;
    std::size_t line = 1, stmt_line = 1;
    bool in_comment = false;
    for (char c : text) {
        if (c == '\n') {
            ++line;
            in_comment = false;
            cur += ' ';
            continue;
        }
        if (in_comment) continue;
        if (c == '#') {
            in_comment = true;
            continue;
        }
        if (c == ';') {
            if (!strip(cur).empty()) stmts.emplace_back(stmt_line, strip(cur));
            cur.clear();
            stmt_line = line;
            continue;
        }
        if (strip(cur).empty()) stmt_line = line;
        cur += c;
    }
    if (!strip(cur).empty()) throw ParseError(stmt_line, "statement missing ';'");

    for (const auto& [ln, stmt] : stmts) {
        if (stmt.rfind("ring", 0) == 0 &&
            (stmt.size() == 4 || std::isspace(static_cast<unsigned char>(stmt[4])))) {
            if (pf.ring) throw ParseError(ln, "duplicate ring declaration");
            std::vector<std::string> vars = split(stmt.substr(4), ',');
            for (const auto& v : vars)
                if (v.empty()) throw ParseError(ln, "empty variable name in ring declaration");
            pf.ring = make_ring(vars);
            continue;
        }
        auto colon = stmt.find(':');
        auto equals = stmt.find('=');
        if (stmt.rfind("option", 0) == 0 && equals != std::string::npos) {
            std::string key = strip(stmt.substr(6, equals - 6));
            std::string value = strip(stmt.substr(equals + 1));
            if (key.empty()) throw ParseError(ln, "option with empty key");
            pf.options[key] = value;
            continue;
        }
        if (colon == std::string::npos) throw ParseError(ln, "unrecognized statement: " + stmt);
        std::string head = strip(stmt.substr(0, colon));
        std::string body = strip(stmt.substr(colon + 1));
        if (!pf.ring) throw ParseError(ln, "ring must be declared before polynomials");
        try {
            if (head == "variety")
                pf.variety.push_back(parse_poly(body, pf.ring));
            else if (head == "F")
                pf.F.push_back(parse_poly(body, pf.ring));
            else if (head == "phi") {
                if (pf.has_phi()) throw ParseError(ln, "duplicate phi");
                pf.phi.push_back(parse_poly(body, pf.ring));
            } else
                throw ParseError(ln, "unknown section '" + head + "'");
        } catch (const ParseError& e) {
            throw ParseError(ln, std::string("line ") + std::to_string(ln) + ": " + e.what());
        }
    }
    if (!pf.ring) throw ParseError(1, "missing ring declaration");
    return pf;
}

ProblemFile load_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open problem file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_problem_file(ss.str());
}

}  // namespace polycert
