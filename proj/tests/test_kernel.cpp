#include <catch2/catch_amalgamated.hpp>

#include <sextic/groebner.hpp>
#include <sextic/parse.hpp>
#include <sextic/solve.hpp>

using namespace sextic;

TEST_CASE("rational rendering is canonical p/q") {
    CHECK(to_string(Rational(3)) == "3");
    CHECK(to_string(Rational(-1, 2)) == "-1/2");
    CHECK(to_string(Rational(4, 6)) == "2/3");
}

TEST_CASE("quadratic field arithmetic") {
    // Q(t), t^2 = 2
    UPoly m({Rational(-2), Rational(0), Rational(1)});
    AdjoinResult a = adjoin_root(m);
    FElem t = a.root;
    CHECK((t * t).str() == "2");
    FElem inv = (t + FElem(1)).inverse();
    CHECK((inv * (t + FElem(1))).str() == "1");
    auto s = sqrt_in_field(t * t);
    REQUIRE(s.has_value());
}

TEST_CASE("buchberger on a zero-dimensional system") {
    RingPtr R = make_ring({"x", "y"}, {1, 1});
    MPoly x = MPoly::variable(R, "x"), y = MPoly::variable(R, "y");
    // V(x^2 - 1, y - x) = {(1,1), (-1,-1)}
    auto GB = buchberger({x * x - MPoly(R, FElem(1)), y - x});
    CHECK(is_zero_dimensional(GB, nullptr));
    CHECK(quotient_dimension(GB) == 2);
    SolveResult sol = zero_dim_solve({x * x - MPoly(R, FElem(1)), y - x});
    REQUIRE(sol.zero_dimensional);
    CHECK(sol.points.size() == 2);
    CHECK(sol.unresolved_count == 0);
}

TEST_CASE("solver reports multiplicity and Galois orbits") {
    RingPtr R = make_ring({"x", "y"}, {1, 1});
    MPoly x = MPoly::variable(R, "x"), y = MPoly::variable(R, "y");
    // (x^2 - 2) has an irrational conjugate pair; y^2 a double root.
    SolveResult sol = zero_dim_solve({x * x - MPoly(R, FElem(2)), y * y});
    REQUIRE(sol.zero_dimensional);
    long total = sol.unresolved_count;
    for (const auto& p : sol.points) total += p.orbit_size * p.multiplicity;
    CHECK(total == sol.quotient_dim);
    CHECK(sol.quotient_dim == 4);
}

TEST_CASE("positive-dimensional systems are refused with a witness") {
    RingPtr R = make_ring({"x", "y"}, {1, 1});
    MPoly x = MPoly::variable(R, "x"), y = MPoly::variable(R, "y");
    SolveResult sol = zero_dim_solve({x * y});
    CHECK_FALSE(sol.zero_dimensional);
    CHECK_FALSE(sol.posdim_witness.empty());
}

TEST_CASE("parser grammar and errors") {
    MPoly f = parse_polynomial("x3^2 + x2*y2*(x2+y2) + y1^6");
    RingPtr R = f.ring();
    MPoly x2 = MPoly::variable(R, "x2"), y2 = MPoly::variable(R, "y2");
    MPoly x3 = MPoly::variable(R, "x3"), y1 = MPoly::variable(R, "y1");
    CHECK(f == x3 * x3 + x2 * y2 * (x2 + y2) + y1.pow(6));

    MPoly g = parse_polynomial("x3^2 - 1/2*x2^3");
    Expo e(R->nvars(), 0);
    e[std::size_t(R->index_of("x2"))] = 3;
    CHECK(g.coeff(e).str() == "-1/2");

    CHECK_THROWS_AS(parse_polynomial("x5^2"), AnalyzerError);
    CHECK_THROWS_AS(parse_polynomial("x1 + + *"), AnalyzerError);
}

TEST_CASE("parse-print-parse is a fixed point") {
    for (const char* s : {"x3^2 - 1/2*x2^3 + x1^6", "x1*y1^5 - y2*x2^2",
                          "7/3*x1^2*y1^4 + x3^2 - x2^3 + y2^3"}) {
        MPoly f = parse_polynomial(s);
        CHECK(parse_polynomial(f.str()) == f);
    }
}
