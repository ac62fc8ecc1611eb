#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "koszul.hpp"
#include "testutil.hpp"

using namespace mfwb;
using tu::P;

TEST_CASE("doubled context") {
    RingContext ctx = corpus::xy();
    DoubledPtr dc = make_doubled(ctx);
    CHECK(dc->n == 2);
    CHECK(*dc->dvars == Vars{"x", "y", "x_y", "y_y"});
    CHECK(dc->wt == P("x_y*y_y - x*y", dc->dvars));
    CHECK(dc->delta[0] == P("x_y - x", dc->dvars));
    CHECK(dc->sub_all_yx(dc->wt).is_zero());
}

TEST_CASE("doubled variable names avoid collisions") {
    RingContext ctx = make_ring({"x", "x_y"}, "x*x_y");
    DoubledPtr dc = make_doubled(ctx);
    CHECK(dc->dvars->size() == 4);
    // all names distinct
    for (size_t i = 0; i < dc->dvars->size(); ++i)
        for (size_t j = i + 1; j < dc->dvars->size(); ++j)
            CHECK((*dc->dvars)[i] != (*dc->dvars)[j]);
}

TEST_CASE("division without remainder: spec examples") {
    RingContext ctx = corpus::ak(2); // base var x, doubled x_y
    DoubledPtr dc = make_doubled(ctx);
    auto dv = dc->dvars;
    {
        auto [f0, f1] = divide_without_remainder(*dc, P("x_y", dv), 0);
        CHECK(f0 == P("x", dv));
        CHECK(f1 == P("1", dv));
    }
    {
        auto [f0, f1] = divide_without_remainder(*dc, P("x_y^2 + x*x_y + x^2", dv), 0);
        CHECK(f0 == P("3*x^2", dv));
        CHECK(f1 == P("x_y + 2*x", dv));
    }
    {
        Polynomial f = P("x^3 + 7", dv); // free of x_y
        auto [f0, f1] = divide_without_remainder(*dc, f, 0);
        CHECK(f0 == f);
        CHECK(f1.is_zero());
    }
}

TEST_CASE("random reconstruction f = f0 + Delta f1") {
    corpus::Rng rng(51);
    RingContext ctx = corpus::cube();
    DoubledPtr dc = make_doubled(ctx);
    for (int t = 0; t < 40; ++t) {
        Polynomial f = corpus::random_poly(rng, dc->dvars, 4, 4);
        for (int i = 0; i < 2; ++i) {
            auto [f0, f1] = divide_without_remainder(*dc, f, i);
            CHECK(f0 + dc->delta[i] * f1 == f);
            CHECK(f0.degree_in(dc->y_index(i)) <= 0);
        }
    }
}

TEST_CASE("koszul_h and koszul_pr: spec examples") {
    RingContext ctx = corpus::xy();
    DoubledPtr dc = make_doubled(ctx);
    auto dv = dc->dvars;
    {
        // pr_1 of f theta_2 substitutes y_1 -> x_1 and keeps theta_2
        ThetaForm f = ThetaForm::term(dc, 0b10, P("x_y + y_y", dv));
        ThetaForm r = koszul_pr(f, 0);
        CHECK(r.component(0b10) == P("x + y_y", dv));
        CHECK(r.components().size() == 1);
    }
    {
        // pr_1 annihilates theta_1
        ThetaForm f = ThetaForm::term(dc, 0b01, P("1", dv));
        CHECK(koszul_pr(f, 0).is_zero());
    }
    {
        // h_1(w~) for w = x^3 in one variable
        RingContext c3 = corpus::ak(2);
        DoubledPtr d3 = make_doubled(c3);
        ThetaForm wt = ThetaForm::term(d3, 0u, d3->wt);
        ThetaForm h = koszul_h(wt, 0);
        CHECK(h.component(0b1) == P("x_y^2 + x*x_y + x^2", d3->dvars));
    }
}

TEST_CASE("big_P: spec examples at n = 2") {
    RingContext ctx = corpus::xy();
    DoubledPtr dc = make_doubled(ctx);
    auto dv = dc->dvars;
    {
        // top forms are annihilated by every pr, so P = (1/2) id on them
        ThetaForm top = ThetaForm::term(dc, 0b11, P("x*y_y", dv));
        CHECK(big_P(top) == top.scaled(Rat(1, 2)));
    }
    {
        // P(f theta_1) = 1/2 f theta_1 + 1/2 f(y_2 -> x_2) theta_1
        Polynomial f = P("y_y^2 + x", dv);
        ThetaForm w = ThetaForm::term(dc, 0b01, f);
        ThetaForm expect = ThetaForm::term(dc, 0b01, f.scaled(Rat(1, 2)));
        expect.add_component(0b01, dc->sub_yx(f, 1).scaled(Rat(1, 2)));
        CHECK(big_P(w) == expect);
    }
}

TEST_CASE("big_H: spec examples") {
    {
        // n = 1: H = h_1
        RingContext ctx = corpus::ak(2);
        DoubledPtr dc = make_doubled(ctx);
        corpus::Rng rng(52);
        for (int t = 0; t < 10; ++t) {
            ThetaForm w(dc);
            w.add_component(0u, corpus::random_poly(rng, dc->dvars, 3, 3));
            w.add_component(1u, corpus::random_poly(rng, dc->dvars, 3, 3));
            CHECK(big_H(w) == koszul_h(w, 0));
        }
        // H(w~) = (x^2 + x x_y + x_y^2) theta for w = x^3
        ThetaForm wt = ThetaForm::term(dc, 0u, dc->wt);
        CHECK(big_H(wt).component(1u) == P("x^2 + x*x_y + x_y^2", dc->dvars));
    }
    {
        // n = 2, w = xy: H(w~) = 1/2 (x_2 + y_2) theta_1 + 1/2 (x_1 + y_1) theta_2
        RingContext ctx = corpus::xy();
        DoubledPtr dc = make_doubled(ctx);
        ThetaForm wt = ThetaForm::term(dc, 0u, dc->wt);
        ThetaForm h = big_H(wt);
        CHECK(h.component(0b01) == P("y + y_y", dc->dvars).scaled(Rat(1, 2)));
        CHECK(h.component(0b10) == P("x + x_y", dc->dvars).scaled(Rat(1, 2)));
        // contraction recovers w~
        CHECK(iota_delta(h) == wt);
    }
}

TEST_CASE("delta_stab: spec examples") {
    {
        RingContext ctx = corpus::xy();
        DeltaStab ds = delta_stab(make_doubled(ctx));
        Polynomial check(ds.dc->dvars);
        for (int i = 0; i < 2; ++i)
            check += ds.w_coeffs[i] * ds.dc->delta[i];
        CHECK(check == ds.dc->wt);
    }
    {
        RingContext ctx = corpus::ak(2); // w = x^3
        DeltaStab ds = delta_stab(make_doubled(ctx));
        CHECK(ds.w_coeffs[0] == P("x^2 + x*x_y + x_y^2", ds.dc->dvars));
    }
    {
        RingContext ctx = corpus::ak(1); // w = x^2: lambda = (x + x_y) theta
        DeltaStab ds = delta_stab(make_doubled(ctx));
        CHECK(ds.w_coeffs[0] == P("x + x_y", ds.dc->dvars));
        CHECK(ds.w_coeffs[0] * ds.dc->delta[0] == ds.dc->wt);
    }
}

TEST_CASE("twisted differential squares to w~ on random forms") {
    corpus::Rng rng(53);
    RingContext ctx = corpus::xy();
    DoubledPtr dc = make_doubled(ctx);
    DeltaStab ds = delta_stab(dc);
    std::uniform_int_distribution<unsigned> mask(0u, 3u);
    for (int t = 0; t < 30; ++t) {
        ThetaForm w(dc);
        w.add_component(mask(rng), corpus::random_poly(rng, dc->dvars, 3, 3));
        w.add_component(mask(rng), corpus::random_poly(rng, dc->dvars, 3, 3));
        ThetaForm sq = twisted_differential(ds, twisted_differential(ds, w));
        CHECK(sq == w.scaled_poly(dc->wt));
    }
}

TEST_CASE("property suite passes for n = 1, 2, 3") {
    for (const RingContext& ctx : {corpus::ak(2), corpus::cube(),
                                   make_ring({"x", "y", "z"}, "x^3 + y^3 + z^3")}) {
        KoszulSuiteResult r = koszul_property_suite(ctx, 30, 99);
        CHECK(r.all());
    }
}

TEST_CASE("eta check: spec examples") {
    {
        // n = 1, E = (x, x^2), w = x^3: eta_1 = -[[0,1],[2x,0]] mod Delta
        RingContext ctx = corpus::ak(2);
        MatrixFactorization e = corpus::ak_mf(ctx, 1);
        EtaReport r = eta_check(e);
        CHECK(r.pass);
        CHECK(r.eta_top_reduced.at(0, 1) == P("-1", ctx.vars));
        CHECK(r.eta_top_reduced.at(1, 0) == P("-2*x", ctx.vars));
        CHECK(r.eta_top_reduced.at(0, 0).is_zero());
        CHECK(r.reference.at(0, 1) == P("-1", ctx.vars));
    }
    {
        // n = 2, E = (x, y), w = xy: eta_2 = -1/2 diag(1, -1) mod Delta
        RingContext ctx = corpus::xy();
        MatrixFactorization e = corpus::xy_mf(ctx);
        EtaReport r = eta_check(e);
        CHECK(r.pass);
        CHECK(r.eta_top_reduced.at(0, 0) == P("-1/2", ctx.vars));
        CHECK(r.eta_top_reduced.at(1, 1) == P("1/2", ctx.vars));
        CHECK(r.eta_top_reduced.at(0, 1).is_zero());
    }
    {
        // rank 2, n = 2
        RingContext ctx = corpus::cube();
        CHECK(eta_check(corpus::cube_mf(ctx)).pass);
    }
}

TEST_CASE("matrix-level H agrees with (sum h_i) after P") {
    corpus::Rng rng(54);
    RingContext ctx = corpus::xy();
    MatrixFactorization e = corpus::xy_mf(ctx);
    DoubledPtr dc = make_doubled(ctx);
    std::uniform_int_distribution<unsigned> mask(0u, 3u);
    for (int t = 0; t < 15; ++t) {
        SuperMatrix m(dc->dvars, e.rank, e.rank, e.rank, e.rank, Parity::Mixed);
        for (int a = 0; a < 2 * e.rank; ++a)
            for (int b = 0; b < 2 * e.rank; ++b)
                m.at(a, b) = corpus::random_poly(rng, dc->dvars, 2, 2);
        MatThetaForm v = MatThetaForm::term(dc, mask(rng), m);
        MatThetaForm lhs = mat_big_H(v);
        MatThetaForm p = mat_big_P(v);
        MatThetaForm rhs(dc, e.rank);
        for (int i = 0; i < dc->n; ++i)
            rhs = rhs + mat_h(p, i);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("matrix-coefficient operators respect the contraction identity") {
    // [iota_Delta, -(-H)] = id - iota proj on matrix forms, via the retract.
    RingContext ctx = corpus::xy();
    MatrixFactorization e = corpus::xy_mf(ctx);
    DeltaStabRetract r = make_delta_stab_retract(e, 3);
    // make_delta_stab_retract verifies the datum; spot-check one vector by hand
    MatThetaForm v = r.datum.basisB[r.datum.basisB.size() / 2];
    MatThetaForm lhs = r.datum.ops.iota(r.datum.ops.proj(v));
    MatThetaForm rhs = v + r.datum.ops.dB(r.datum.ops.h(v)) + r.datum.ops.h(r.datum.ops.dB(v));
    CHECK(lhs == rhs);
}
