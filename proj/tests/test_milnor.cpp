#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "milnor.hpp"
#include "testutil.hpp"

using namespace mfwb;
using tu::P;

TEST_CASE("jacobian: spec examples") {
    {
        RingContext ctx = corpus::ak(2);
        auto t = jacobian(ctx);
        REQUIRE(t.size() == 1);
        CHECK(t[0] == P("3*x^2", ctx.vars));
    }
    {
        RingContext ctx = corpus::xy();
        auto t = jacobian(ctx);
        CHECK(t[0] == P("y", ctx.vars));
        CHECK(t[1] == P("x", ctx.vars));
    }
    {
        RingContext ctx = make_ring({"x", "y"}, "x^3 + y^5");
        auto t = jacobian(ctx);
        CHECK(t[0] == P("3*x^2", ctx.vars));
        CHECK(t[1] == P("5*y^4", ctx.vars));
    }
}

TEST_CASE("milnor context: spec examples") {
    {
        MilnorContext mc = MilnorContext::build(corpus::ak(2)); // w = x^3
        CHECK(mc.mu() == 2);
        REQUIRE(mc.basis().size() == 2);
        CHECK(mc.basis_monomial(0) == P("1", mc.ring().vars));
        CHECK(mc.basis_monomial(1) == P("x", mc.ring().vars));
    }
    {
        MilnorContext mc = MilnorContext::build(corpus::xy());
        CHECK(mc.mu() == 1);
        CHECK(mc.basis_monomial(0) == P("1", mc.ring().vars));
    }
    {
        MilnorContext mc = MilnorContext::build(corpus::cube());
        CHECK(mc.mu() == 4);
        std::vector<std::string> names;
        for (int k = 0; k < mc.mu(); ++k)
            names.push_back(mc.basis_monomial(k).to_string());
        // graded-lex ascending: y precedes x in the same degree
        CHECK(names == std::vector<std::string>{"1", "y", "x", "x*y"});
        std::sort(names.begin(), names.end());
        CHECK(names == std::vector<std::string>{"1", "x", "x*y", "y"});
    }
}

TEST_CASE("milnor numbers stable across caps") {
    for (int k = 1; k <= 6; ++k) {
        MilnorContext a = MilnorContext::build(corpus::ak(k), 50);
        MilnorContext b = MilnorContext::build(corpus::ak(k), a.stabilized_degree() + 5);
        CHECK(a.mu() == k);
        CHECK(b.mu() == k);
        CHECK(a.basis() == b.basis());
    }
    MilnorContext mc = MilnorContext::build(corpus::x2y3());
    CHECK(mc.mu() == 2);
}

TEST_CASE("non-isolated singularity is detected") {
    RingContext ctx = make_ring({"x", "y"}, "x^2*y^2");
    CHECK_THROWS_WITH_AS(MilnorContext::build(ctx, 20),
                         doctest::Contains("did not stabilize"), Error);
}

TEST_CASE("smooth point reports mu = 0 with a warning") {
    RingContext ctx = make_ring({"x"}, "x + x^3");
    MilnorContext mc = MilnorContext::build(ctx);
    CHECK(mc.smooth());
    CHECK(mc.mu() == 0);
    CHECK(mc.basis().empty());
    CHECK(mc.normal_form(P("x^2", ctx.vars)).empty());
}

TEST_CASE("normal form: spec examples") {
    MilnorContext mc = MilnorContext::build(corpus::ak(2)); // w = x^3, basis {1, x}
    auto vars = mc.ring().vars;
    {
        auto c = mc.normal_form(P("1", vars));
        CHECK(c == std::vector<Rat>{Rat(1), Rat(0)});
    }
    {
        auto c = mc.normal_form(P("3*x^2", vars));
        CHECK(c == std::vector<Rat>{Rat(0), Rat(0)});
    }
    {
        auto c = mc.normal_form(P("x + x^5", vars));
        CHECK(c == std::vector<Rat>{Rat(0), Rat(1)});
    }
}

TEST_CASE("normal form properties") {
    corpus::Rng rng(21);
    for (const RingContext& ctx : {corpus::ak(3), corpus::cube(), corpus::x2y3()}) {
        MilnorContext mc = MilnorContext::build(ctx);
        for (int t = 0; t < 25; ++t) {
            Polynomial q = corpus::random_poly(rng, ctx.vars, 3, 3);
            for (const Polynomial& tj : mc.jacobian()) {
                auto c = mc.normal_form(tj * q);
                for (const Rat& v : c)
                    CHECK(v == Rat(0));
            }
            Polynomial p = corpus::random_poly(rng, ctx.vars, 4, 3);
            Polynomial q2 = corpus::random_poly(rng, ctx.vars, 4, 3);
            auto sum = mc.normal_form(p + q2);
            auto c1 = mc.normal_form(p);
            auto c2 = mc.normal_form(q2);
            for (size_t i = 0; i < sum.size(); ++i)
                CHECK(sum[i] == c1[i] + c2[i]);

            // normal_form(lift(c)) = c, and p - lift(normal_form(p)) reduces to 0
            CHECK(mc.normal_form(mc.lift(c1)) == c1);
            auto zero = mc.normal_form(p - mc.lift(c1));
            for (const Rat& v : zero)
                CHECK(v == Rat(0));
        }
    }
}

TEST_CASE("high-degree inputs extend the reducer") {
    MilnorContext mc = MilnorContext::build(corpus::xy());
    auto vars = mc.ring().vars;
    Polynomial big = P("x^30*y^30 + x", vars); // far beyond the stored bound
    auto c = mc.normal_form(big);
    REQUIRE(c.size() == 1);
    CHECK(c[0] == Rat(0)); // both terms lie in (y, x)
}
