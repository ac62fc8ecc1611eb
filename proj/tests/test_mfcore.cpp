#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mfcore.hpp"
#include "testutil.hpp"

using namespace mfwb;
using tu::P;

TEST_CASE("validate_mf: spec examples") {
    {
        RingContext ctx = corpus::xy();
        PolyMat phi(ctx.vars, 1, 1), psi(ctx.vars, 1, 1);
        phi.at(0, 0) = P("x", ctx.vars);
        psi.at(0, 0) = P("y", ctx.vars);
        CHECK_NOTHROW(validate_mf(ctx, phi, psi));
    }
    {
        RingContext ctx = corpus::ak(2); // w = x^3
        PolyMat phi(ctx.vars, 1, 1), psi(ctx.vars, 1, 1);
        phi.at(0, 0) = P("x", ctx.vars);
        psi.at(0, 0) = P("x^2", ctx.vars);
        CHECK_NOTHROW(validate_mf(ctx, phi, psi));
    }
    {
        RingContext ctx = corpus::ak(2);
        PolyMat phi(ctx.vars, 1, 1), psi(ctx.vars, 1, 1);
        phi.at(0, 0) = P("x", ctx.vars);
        psi.at(0, 0) = P("x", ctx.vars);
        CHECK_THROWS_WITH_AS(validate_mf(ctx, phi, psi, "bad"),
                             doctest::Contains("x^2"), Error);
    }
}

TEST_CASE("hom differential: spec examples") {
    RingContext ctx = corpus::ak(2); // w = x^3, E = (x, x^2)
    MatrixFactorization e = corpus::ak_mf(ctx, 1);

    // d(id) = 0
    CHECK(hom_differential(identity_morphism(e)).mat.is_zero());

    // d(Q) = 2 w id for the odd endomorphism Q
    Morphism q = make_morphism(e, e, e.Q());
    SuperMatrix expect =
        SuperMatrix::identity(ctx.vars, 1, 1).scaled_poly(ctx.w).scaled(Rat(2));
    CHECK(hom_differential(q).mat == expect);

    // diag(a | d) with a = 1 + x, d = x^2
    SuperMatrix f(ctx.vars, 1, 1, 1, 1, Parity::Even);
    f.at(0, 0) = P("1 + x", ctx.vars);
    f.at(1, 1) = P("x^2", ctx.vars);
    Morphism df = hom_differential(make_morphism(e, e, f));
    Polynomial a = P("1 + x", ctx.vars), d = P("x^2", ctx.vars);
    CHECK(df.mat.at(0, 1) == P("x", ctx.vars) * (d - a));
    CHECK(df.mat.at(1, 0) == P("x^2", ctx.vars) * (a - d));
    CHECK(df.parity() == Parity::Odd);

    // mixed parity is rejected
    SuperMatrix mixed(ctx.vars, 1, 1, 1, 1, Parity::Mixed);
    mixed.at(0, 0) = P("x", ctx.vars);
    mixed.at(0, 1) = P("1", ctx.vars);
    CHECK_THROWS_AS(hom_differential(make_morphism(e, e, mixed)), Error);
}

TEST_CASE("d squares to zero on random morphisms") {
    corpus::Rng rng(11);
    RingContext ctx = corpus::cube();
    MatrixFactorization e = corpus::cube_mf(ctx);
    MatrixFactorization s = shift(e);
    for (int t = 0; t < 20; ++t)
        for (Parity p : {Parity::Even, Parity::Odd}) {
            Morphism f = corpus::random_morphism(rng, e, s, p);
            CHECK(hom_differential(hom_differential(f)).mat.is_zero());
        }
}

TEST_CASE("d is a derivation for composition") {
    corpus::Rng rng(12);
    RingContext ctx = corpus::ak(3);
    MatrixFactorization x = corpus::ak_mf(ctx, 1);
    MatrixFactorization y = corpus::ak_mf(ctx, 2);
    MatrixFactorization z = corpus::ak_mf(ctx, 3);
    for (int t = 0; t < 20; ++t)
        for (Parity pf : {Parity::Even, Parity::Odd})
            for (Parity pg : {Parity::Even, Parity::Odd}) {
                Morphism f = corpus::random_morphism(rng, y, z, pf);
                Morphism g = corpus::random_morphism(rng, x, y, pg);
                Morphism lhs = hom_differential(compose(f, g));
                Morphism rhs = compose(hom_differential(f), g);
                Morphism fg = compose(f, hom_differential(g));
                if (pf == Parity::Odd)
                    rhs = rhs - fg;
                else
                    rhs = rhs + fg;
                CHECK(lhs.mat == rhs.mat);
                CHECK(supertrace(lhs.mat) == supertrace(rhs.mat));
            }
}

TEST_CASE("dq_wedge: spec examples") {
    {
        RingContext ctx = corpus::ak(2);
        MatrixFactorization e = corpus::ak_mf(ctx, 1);
        SuperMatrix w = dq_wedge(e);
        CHECK(w.at(0, 1) == P("1", ctx.vars));
        CHECK(w.at(1, 0) == P("2*x", ctx.vars));
        CHECK(w.at(0, 0).is_zero());
        CHECK(w.parity() == Parity::Odd);
    }
    {
        RingContext ctx = corpus::xy();
        MatrixFactorization e = corpus::xy_mf(ctx);
        SuperMatrix w = dq_wedge(e);
        CHECK(w.at(0, 0) == P("1", ctx.vars));
        CHECK(w.at(1, 1) == P("-1", ctx.vars));
        CHECK(supertrace(w) == P("2", ctx.vars));
        CHECK(w.parity() == Parity::Even);
    }
    {
        // Q independent of y: the wedge over both variables vanishes.
        RingContext ctx = make_ring({"x", "y"}, "x^2");
        PolyMat phi(ctx.vars, 1, 1), psi(ctx.vars, 1, 1);
        phi.at(0, 0) = P("x", ctx.vars);
        psi.at(0, 0) = P("x", ctx.vars);
        MatrixFactorization e = validate_mf(ctx, phi, psi);
        CHECK(dq_wedge(e).is_zero());
    }
}

TEST_CASE("Leibniz consequence of Q^2 = wI") {
    RingContext ctx = corpus::cube();
    MatrixFactorization e = corpus::cube_mf(ctx);
    SuperMatrix q = e.Q();
    for (int i = 0; i < 2; ++i) {
        SuperMatrix dq = q.derivative(i);
        SuperMatrix expect = SuperMatrix::identity(ctx.vars, e.rank, e.rank)
                                 .scaled_poly(ctx.w.derivative(i));
        CHECK(dq * q + q * dq == expect);
    }
}

TEST_CASE("direct sum: spec examples") {
    RingContext ctx = corpus::xy();
    MatrixFactorization e = corpus::xy_mf(ctx);
    MatrixFactorization s = direct_sum(e, e);
    CHECK(s.rank == 2);
    CHECK(s.phi.at(0, 0) == P("x", ctx.vars));
    CHECK(s.phi.at(1, 1) == P("x", ctx.vars));
    CHECK(s.psi.at(0, 0) == P("y", ctx.vars));
    CHECK(s.phi.at(0, 1).is_zero());

    // dq_wedge of a sum is the block sum of the wedges
    SuperMatrix ws = dq_wedge(s);
    SuperMatrix we = dq_wedge(e);
    CHECK(ws.at(0, 0) == we.at(0, 0));
    CHECK(ws.at(1, 1) == we.at(0, 0));
    CHECK(ws.at(2, 2) == we.at(1, 1));
    CHECK(ws.at(0, 1).is_zero());
}

TEST_CASE("shift: spec examples") {
    RingContext ctx = corpus::xy();
    MatrixFactorization e = corpus::xy_mf(ctx);
    MatrixFactorization s = shift(e);
    CHECK(s.phi.at(0, 0) == P("-y", ctx.vars));
    CHECK(s.psi.at(0, 0) == P("-x", ctx.vars));
    MatrixFactorization ss = shift(s);
    CHECK(ss.phi == e.phi);
    CHECK(ss.psi == e.psi);
}

TEST_CASE("wedge oracle equivalence on random factorizations") {
    corpus::Rng rng(13);
    for (int t = 0; t < 15; ++t) {
        MatrixFactorization e = corpus::random_mf(rng);
        CHECK(dq_wedge(e) == dq_wedge_naive(e));
    }
}
