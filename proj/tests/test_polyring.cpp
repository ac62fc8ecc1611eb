#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"

using namespace mfwb;
using tu::P;

TEST_CASE("rational basics") {
    CHECK(Rat(1, 3) + Rat(2, 5) == Rat(11, 15));
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-1, 2).to_string() == "-1/2");
    CHECK(Rat::from_string("7/3") == Rat(7, 3));
    CHECK(Rat::from_string("-4") == Rat(-4));
    CHECK_THROWS_AS(Rat::from_string("1/0"), Error);
    CHECK_THROWS_AS(Rat::from_string("x"), Error);
    CHECK(Rat(3, -6) == Rat(-1, 2));
    CHECK((Rat(2, 3) * Rat(3, 2)).is_one());
}

TEST_CASE("parse: spec examples") {
    auto vars = tu::vars_xy();
    {
        Polynomial p = P("x*y", vars);
        CHECK(p.terms().size() == 1);
        CHECK(p.coefficient({1, 1}) == Rat(1));
    }
    {
        Polynomial p = P("x^3 + y^3", vars);
        CHECK(p.coefficient({3, 0}) == Rat(1));
        CHECK(p.coefficient({0, 3}) == Rat(1));
        CHECK(p.terms().size() == 2);
    }
    {
        Polynomial p = P("3*x^2*y - 1/2", vars);
        CHECK(p.coefficient({2, 1}) == Rat(3));
        CHECK(p.coefficient({0, 0}) == Rat(-1, 2));
        CHECK(p.terms().size() == 2);
    }
}

TEST_CASE("parse errors carry positions") {
    auto vars = tu::vars_xy();
    CHECK_THROWS_WITH_AS(P("x + z", vars), doctest::Contains("unknown identifier 'z'"),
                         Error);
    CHECK_THROWS_WITH_AS(P("x^-2", vars), doctest::Contains("negative exponent"), Error);
    CHECK_THROWS_AS(P("x +", vars), Error);
    CHECK_THROWS_AS(P("(x", vars), Error);
    CHECK_THROWS_AS(P("x県", vars), Error);
    try {
        P("x * q", vars);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == Errc::io);
        CHECK(std::string(e.what()).find("position 4") != std::string::npos);
    }
}

TEST_CASE("arithmetic: spec examples") {
    auto vars = tu::vars_xy();
    CHECK(P("(x+y)*(x-y)", vars) == P("x^2 - y^2", vars));
    Polynomial p = P("x^2*y - 3*x + 2/7", vars);
    CHECK(p + Polynomial::zero(vars) == p);
    CHECK(P("x^2", vars) - P("x", vars) == P("x^2 - x", vars));
}

TEST_CASE("derivative: spec examples") {
    auto vars = tu::vars_xy();
    CHECK(P("x^3", vars).derivative(0) == P("3*x^2", vars));
    CHECK(P("x*y", vars).derivative(1) == P("x", vars));
    CHECK(P("5/3", vars).derivative(0).is_zero());
    CHECK_THROWS_AS(P("x", vars).derivative(2), Error);
}

TEST_CASE("substitute: spec examples") {
    auto vars = tu::vars_xy();
    {
        // x^3 with x -> y
        std::map<int, Polynomial> a{{0, P("y", vars)}};
        CHECK(P("x^3", vars).substitute(a, vars) == P("y^3", vars));
    }
    {
        // w~ = w(y1, y2) - w(x1, x2) for w = x*y
        auto big = make_vars({"x1", "x2", "y1", "y2"});
        Polynomial w = P("x*y", vars);
        std::map<int, Polynomial> to_y{{0, P("y1", big)}, {1, P("y2", big)}};
        std::map<int, Polynomial> to_x{{0, P("x1", big)}, {1, P("x2", big)}};
        Polynomial wt = w.substitute(to_y, big) - w.substitute(to_x, big);
        CHECK(wt == P("y1*y2 - x1*x2", big));
    }
    {
        Polynomial p = P("x^2 + y", vars);
        CHECK(p.substitute({}, vars) == p);
    }
}

TEST_CASE("monomial coefficient: spec examples") {
    auto x = tu::vars_x();
    CHECK(P("x + 2*x^2", x).coefficient({2}) == Rat(2));
    auto xy = tu::vars_xy();
    CHECK(P("1", xy).coefficient({0, 0}) == Rat(1));
    CHECK(P("x*y", xy).coefficient({2, 0}) == Rat(0));
}

TEST_CASE("ring axioms on random polynomials") {
    corpus::Rng rng(7);
    auto vars = tu::vars_xy();
    for (int t = 0; t < 40; ++t) {
        Polynomial a = corpus::random_poly(rng, vars, 3, 3);
        Polynomial b = corpus::random_poly(rng, vars, 3, 3);
        Polynomial c = corpus::random_poly(rng, vars, 3, 3);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("Leibniz rule on random polynomials") {
    corpus::Rng rng(8);
    auto vars = tu::vars_xy();
    for (int t = 0; t < 40; ++t) {
        Polynomial p = corpus::random_poly(rng, vars, 3, 3);
        Polynomial q = corpus::random_poly(rng, vars, 3, 3);
        for (int i = 0; i < 2; ++i)
            CHECK((p * q).derivative(i) == p.derivative(i) * q + p * q.derivative(i));
    }
}

TEST_CASE("substitution is a ring homomorphism") {
    corpus::Rng rng(9);
    auto vars = tu::vars_xy();
    for (int t = 0; t < 25; ++t) {
        Polynomial p = corpus::random_poly(rng, vars, 2, 3);
        Polynomial q = corpus::random_poly(rng, vars, 2, 3);
        std::map<int, Polynomial> a{{0, corpus::random_poly(rng, vars, 2, 2)}};
        CHECK((p * q).substitute(a, vars) == p.substitute(a, vars) * q.substitute(a, vars));
        CHECK((p + q).substitute(a, vars) == p.substitute(a, vars) + q.substitute(a, vars));
    }
}

TEST_CASE("parse-print round trip") {
    corpus::Rng rng(10);
    for (const VarsPtr& vars :
         {tu::vars_x(), tu::vars_xy(), make_vars({"x", "y", "z"})}) {
        for (int t = 0; t < 60; ++t) {
            Polynomial p = corpus::random_poly(rng, vars, 4, 4);
            CHECK(P(p.to_string(), vars) == p);
        }
    }
    auto vars = tu::vars_xy();
    CHECK(Polynomial::zero(vars).to_string() == "0");
    CHECK(P("-x - 1", vars).to_string() == "-x - 1");
}

TEST_CASE("printing uses graded-lex order") {
    auto vars = tu::vars_xy();
    CHECK(P("y + x + x*y + 1", vars).to_string() == "x*y + x + y + 1");
    CHECK(P("x^2 + y^3", vars).to_string() == "y^3 + x^2");
}

TEST_CASE("ring context invariants") {
    CHECK_THROWS_AS(make_ring({"x"}, "x + 1"), Error); // constant term
    CHECK_THROWS_AS(make_ring({"x", "x"}, "x"), Error);
    CHECK_THROWS_AS(make_ring({"x"}, "0"), Error);
    RingContext ctx = make_ring({"x", "y"}, "x*y");
    CHECK(ctx.n() == 2);
}
