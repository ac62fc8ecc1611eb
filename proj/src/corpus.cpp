#include "corpus.hpp"

#include "error.hpp"

namespace mfwb::corpus {

RingContext ak(int k)
{
    return make_ring({"x"}, "x^" + std::to_string(k + 1));
}

MatrixFactorization ak_mf(const RingContext& ctx, int a)
{
    int k = ctx.w.degree() - 1;
    if (a < 1 || a > k)
        fail(Errc::validation, "A_k summand exponent out of range");
    PolyMat phi(ctx.vars, 1, 1), psi(ctx.vars, 1, 1);
    phi.at(0, 0) = parse_polynomial("x^" + std::to_string(a), ctx.vars);
    psi.at(0, 0) = parse_polynomial("x^" + std::to_string(k + 1 - a), ctx.vars);
    return validate_mf(ctx, std::move(phi), std::move(psi));
}

RingContext xy()
{
    return make_ring({"x", "y"}, "x*y");
}

MatrixFactorization xy_mf(const RingContext& ctx)
{
    PolyMat phi(ctx.vars, 1, 1), psi(ctx.vars, 1, 1);
    phi.at(0, 0) = parse_polynomial("x", ctx.vars);
    psi.at(0, 0) = parse_polynomial("y", ctx.vars);
    return validate_mf(ctx, std::move(phi), std::move(psi));
}

RingContext cube()
{
    return make_ring({"x", "y"}, "x^3 + y^3");
}

MatrixFactorization cube_mf(const RingContext& ctx)
{
    PolyMat phi(ctx.vars, 2, 2), psi(ctx.vars, 2, 2);
    phi.at(0, 0) = parse_polynomial("x^2", ctx.vars);
    phi.at(0, 1) = parse_polynomial("y", ctx.vars);
    phi.at(1, 0) = parse_polynomial("-y^2", ctx.vars);
    phi.at(1, 1) = parse_polynomial("x", ctx.vars);
    psi.at(0, 0) = parse_polynomial("x", ctx.vars);
    psi.at(0, 1) = parse_polynomial("-y", ctx.vars);
    psi.at(1, 0) = parse_polynomial("y^2", ctx.vars);
    psi.at(1, 1) = parse_polynomial("x^2", ctx.vars);
    return validate_mf(ctx, std::move(phi), std::move(psi));
}

RingContext x2y3()
{
    return make_ring({"x", "y"}, "x^2 + y^3");
}

Rat random_rat(Rng& rng, int max_abs)
{
    std::uniform_int_distribution<int> num(-max_abs, max_abs);
    std::uniform_int_distribution<int> den(1, 3);
    return Rat(num(rng), den(rng));
}

Polynomial random_poly(Rng& rng, const VarsPtr& vars, int max_degree, int terms,
                       bool allow_zero)
{
    int n = static_cast<int>(vars->size());
    std::uniform_int_distribution<int> deg(0, max_degree);
    Polynomial p(vars);
    for (int t = 0; t < terms; ++t) {
        int d = deg(rng);
        Exps e(n, 0);
        for (int rem = d, i = 0; i < n; ++i) {
            std::uniform_int_distribution<int> part(0, rem);
            int k = i + 1 == n ? rem : part(rng);
            e[i] = k;
            rem -= k;
        }
        p.add_term(e, random_rat(rng));
    }
    if (!allow_zero && p.is_zero())
        p = Polynomial::constant(vars, Rat(1));
    return p;
}

Morphism random_morphism(Rng& rng, const MatrixFactorization& x,
                         const MatrixFactorization& y, Parity parity, int max_degree)
{
    SuperMatrix m(x.ctx.vars, y.rank, y.rank, x.rank, x.rank, parity);
    bool want_odd = parity == Parity::Odd;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (m.entry_is_odd(r, c) == want_odd)
                m.at(r, c) = random_poly(rng, x.ctx.vars, max_degree, 2);
    return make_morphism(x, y, std::move(m));
}

MatrixFactorization random_mf(Rng& rng, int max_vars)
{
    static const Vars pool = {"x", "y", "z"};
    std::uniform_int_distribution<int> nv(1, max_vars);
    int n = nv(rng);
    VarsPtr vars = make_vars(Vars(pool.begin(), pool.begin() + n));

    auto nonunit = [&](int tries) {
        for (int t = 0; t < tries; ++t) {
            Polynomial p = random_poly(rng, vars, 2, 2, false);
            Exps zero(n, 0);
            p.add_term(zero, -p.coefficient(zero)); // strip the constant term
            if (!p.is_zero())
                return p;
        }
        return Polynomial::variable(vars, 0);
    };

    std::uniform_int_distribution<int> coin(0, 1);
    if (coin(rng) == 0) {
        Polynomial f = nonunit(4), g = nonunit(4);
        Polynomial w = f * g;
        PolyMat phi(vars, 1, 1), psi(vars, 1, 1);
        phi.at(0, 0) = f;
        psi.at(0, 0) = g;
        return validate_mf(make_ring(vars, w), std::move(phi), std::move(psi));
    }
    // Rank 2: psi is the adjugate of phi, so w = det(phi).
    for (int attempt = 0; attempt < 16; ++attempt) {
        PolyMat phi(vars, 2, 2);
        phi.at(0, 0) = nonunit(4);
        phi.at(0, 1) = random_poly(rng, vars, 2, 2);
        phi.at(1, 0) = random_poly(rng, vars, 2, 2);
        phi.at(1, 1) = nonunit(4);
        Polynomial w = phi.at(0, 0) * phi.at(1, 1) - phi.at(0, 1) * phi.at(1, 0);
        if (w.is_zero() || !w.constant_term().is_zero())
            continue;
        PolyMat psi(vars, 2, 2);
        psi.at(0, 0) = phi.at(1, 1);
        psi.at(0, 1) = -phi.at(0, 1);
        psi.at(1, 0) = -phi.at(1, 0);
        psi.at(1, 1) = phi.at(0, 0);
        return validate_mf(make_ring(vars, w), std::move(phi), std::move(psi));
    }
    // Fall back to a rank 1 pair.
    Polynomial f = nonunit(4), g = nonunit(4);
    PolyMat phi(vars, 1, 1), psi(vars, 1, 1);
    phi.at(0, 0) = f;
    psi.at(0, 0) = g;
    return validate_mf(make_ring(vars, f * g), std::move(phi), std::move(psi));
}

} // namespace mfwb::corpus
