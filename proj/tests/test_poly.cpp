#include <doctest.h>

#include "support/test_util.hpp"

using namespace polycert;
using polycert::testing::pp;
using polycert::testing::ring_of;

TEST_CASE("parse basic polynomials") {
    auto R = ring_of({"x", "y"});
    RatPoly p = pp("x^2 - 2*y", R);
    CHECK(p.term_count() == 2);
    Monomial x2(std::vector<int>{2, 0});
    Monomial y(std::vector<int>{0, 1});
    CHECK(p.coeff(x2) == Rat(1));
    CHECK(p.coeff(y) == Rat(-2));

    CHECK(pp("0", R).is_zero());

    auto R4 = ring_of({"x", "y", "z", "w"});
    RatPoly tc = pp("x*z - y^2", R4);
    CHECK(tc.total_degree() == 2);
    CHECK(tc.term_count() == 2);

    CHECK(pp("3/4*x*y^2", R).coeff(Monomial(std::vector<int>{1, 2})) == make_rat(3, 4));
    CHECK(pp("- x + x", R).is_zero());
}

TEST_CASE("parse errors carry positions") {
    auto R = ring_of({"x", "y"});
    CHECK_THROWS_AS(pp("x + q", R), ParseError);
    CHECK_THROWS_AS(pp("x + ", R), ParseError);
    CHECK_THROWS_AS(pp("x ^", R), ParseError);
    CHECK_THROWS_AS(pp("1/0", R), ParseError);
    try {
        pp("x * 2", R);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position() >= 4);
    }
}

TEST_CASE("format/parse is a fixed point") {
    auto R = ring_of({"x", "y", "z"});
    std::mt19937 rng(7);
    for (int i = 0; i < 25; ++i) {
        RatPoly p = polycert::testing::random_poly(R, 4, rng);
        RatPoly q = pp(p.to_string(), R);
        CHECK(p == q);
        CHECK(q.to_string() == p.to_string());
    }
    CHECK(pp("0", R).to_string() == "0");
}

TEST_CASE("ring operations") {
    auto R = ring_of({"x", "y"});
    RatPoly x = pp("x", R), y = pp("y", R);
    CHECK((x + y) * (x - y) == pp("x^2 - y^2", R));
    RatPoly p = pp("x^2*y - 3*x + 1/2", R);
    CHECK((p + p * Rat(-1)).is_zero());
    CHECK(pp("x^2*y", R).derivative(0) == pp("2*x*y", R));

    auto S = ring_of({"u"});
    CHECK_THROWS_AS(x + pp("u", S), RingMismatchError);
}

TEST_CASE("ring axioms on random triples") {
    auto R = ring_of({"x", "y"});
    std::mt19937 rng(11);
    for (int i = 0; i < 15; ++i) {
        RatPoly a = polycert::testing::random_poly(R, 3, rng);
        RatPoly b = polycert::testing::random_poly(R, 3, rng);
        RatPoly c = polycert::testing::random_poly(R, 3, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        if (!a.is_zero() && !b.is_zero())
            CHECK((a * b).total_degree() == a.total_degree() + b.total_degree());
    }
}

TEST_CASE("homogenize examples") {
    auto R = ring_of({"x"});
    RatPoly p = pp("x + 1", R);
    RatPoly h = homogenize(p, 1);
    CHECK(h.to_string() == "z0 + x");
    CHECK(h.is_homogeneous());

    RatPoly p2 = pp("x^2 + x + 1", R);
    RatPoly h2 = homogenize(p2, 3);
    auto HR = h2.ring();
    CHECK(h2 == pp("z0*x^2 + z0^2*x + z0^3", HR));

    CHECK(homogenize(pp("1", R), 2).to_string() == "z0^2");
    CHECK_THROWS_AS(homogenize(pp("x^2", R), 1), std::invalid_argument);
}

TEST_CASE("dehomogenize examples and round trip") {
    auto R = ring_of({"x"});
    auto HR = ring_of({"z0", "x"});
    CHECK(dehomogenize(pp("z0*x + z0^2", HR)) == pp("x + 1", R));
    CHECK(dehomogenize(pp("z0^3", HR)) == pp("1", R));
    CHECK_THROWS_AS(dehomogenize(pp("z0 + z0^2", HR)), std::invalid_argument);

    auto R2 = ring_of({"x", "y"});
    RatPoly p = pp("x^2*y + 3", R2);
    CHECK(dehomogenize(homogenize(p, 3)) == p);
    CHECK(dehomogenize(homogenize(p, 7)) == p);
}

TEST_CASE("homogenize properties on random polynomials") {
    auto R = ring_of({"x", "y", "z"});
    std::mt19937 rng(3);
    for (int i = 0; i < 20; ++i) {
        RatPoly p = polycert::testing::random_poly(R, 4, rng);
        const int d = std::max(p.total_degree(), 0);
        for (int rho : {d, d + 1, d + 3}) {
            RatPoly h = homogenize(p, rho);
            CHECK(h.is_homogeneous());
            if (!p.is_zero()) CHECK(h.total_degree() == rho);
            CHECK(dehomogenize(h) == p);
        }
    }
}

TEST_CASE("degree sentinel") {
    auto R = ring_of({"x"});
    CHECK(RatPoly::zero(R).total_degree() == kNegInfDegree);
    CHECK(pp("5", R).total_degree() == 0);
}

TEST_CASE("complex evaluation") {
    auto R = ring_of({"x", "y"});
    RatPoly p = pp("x^2 - 2*y", R);
    std::vector<std::complex<double>> pt{{1.0, 1.0}, {0.5, 0.0}};
    auto v = p.evaluate(pt);
    CHECK(std::abs(v - std::complex<double>(-1.0, 2.0)) < 1e-14);
}
