#include "acceptance.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "bulk.hpp"
#include "corpus.hpp"
#include "koszul.hpp"

namespace mfwb {

namespace {

using Clock = std::chrono::steady_clock;

struct Checker {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::string num(int v) { return std::to_string(v); }

// 1. Q^2 = wI and the Leibniz consequence on the whole corpus.
void crit_mf_leibniz(Checker& c)
{
    std::vector<MatrixFactorization> mfs;
    for (int k = 1; k <= 5; ++k) {
        RingContext ctx = corpus::ak(k);
        for (int a = 1; a <= k; ++a)
            mfs.push_back(corpus::ak_mf(ctx, a));
    }
    {
        RingContext ctx = corpus::xy();
        mfs.push_back(corpus::xy_mf(ctx));
    }
    {
        RingContext ctx = corpus::cube();
        mfs.push_back(corpus::cube_mf(ctx));
    }
    for (const MatrixFactorization& e : mfs) {
        SuperMatrix q = e.Q();
        SuperMatrix wi = SuperMatrix::identity(e.ctx.vars, e.rank, e.rank)
                             .scaled_poly(e.ctx.w);
        c.expect(q * q == wi, "Q^2 != w*I for w = " + e.ctx.w.to_string());
        for (int i = 0; i < e.ctx.n(); ++i) {
            SuperMatrix dq = q.derivative(i);
            SuperMatrix lhs = dq * q + q * dq;
            SuperMatrix rhs = SuperMatrix::identity(e.ctx.vars, e.rank, e.rank)
                                  .scaled_poly(e.ctx.w.derivative(i));
            c.expect(lhs == rhs, "Leibniz identity fails for w = " + e.ctx.w.to_string());
        }
    }
}

// 2. Milnor numbers against the row-reduction oracle at two caps.
void crit_milnor(Checker& c)
{
    auto check = [&](const RingContext& ctx, int expected) {
        MilnorContext a = MilnorContext::build(ctx, 50);
        MilnorContext b = MilnorContext::build(ctx, a.stabilized_degree() + 6);
        c.expect(a.mu() == expected, "mu(" + ctx.w.to_string() + ") = " + num(a.mu()) +
                                         ", expected " + num(expected));
        c.expect(a.mu() == b.mu() && a.basis() == b.basis(),
                 "Milnor data differs across truncation caps for " + ctx.w.to_string());
    };
    for (int k = 1; k <= 6; ++k)
        check(corpus::ak(k), k);
    check(corpus::xy(), 1);
    check(corpus::cube(), 4);
    check(corpus::x2y3(), 2);
}

// 3. Residue suite: witness independence, vanishing on the Jacobian ideal,
// and the two pinned values.
void crit_residue(Checker& c)
{
    corpus::Rng rng(1003);
    std::vector<RingContext> rings;
    for (int k = 1; k <= 6; ++k)
        rings.push_back(corpus::ak(k));
    rings.push_back(corpus::xy());
    rings.push_back(corpus::cube());
    rings.push_back(corpus::x2y3());

    for (const RingContext& ctx : rings) {
        MilnorContext mc = MilnorContext::build(ctx);
        PowerWitness w1 = power_witness(mc);
        PowerWitness w2 = power_witness_at(mc, w1.N + 1);
        for (int t = 0; t < 8; ++t) {
            Polynomial g = corpus::random_poly(rng, ctx.vars, 4, 3);
            c.expect(residue_with_witness(g, mc, w1) == residue_with_witness(g, mc, w2),
                     "witness independence fails for " + ctx.w.to_string());
        }
        for (int t = 0; t < 50; ++t) {
            Polynomial g(ctx.vars);
            for (const Polynomial& tj : mc.jacobian())
                g += corpus::random_poly(rng, ctx.vars, 3, 2) * tj;
            c.expect(residue_with_witness(g, mc, w1) == Rat(0),
                     "residue does not vanish on the Jacobian ideal of " +
                         ctx.w.to_string());
        }
    }
    {
        RingContext ctx = corpus::ak(2); // w = x^3
        MilnorContext mc = MilnorContext::build(ctx);
        Polynomial g = parse_polynomial("3*x", ctx.vars);
        c.expect(residue(g, mc) == Rat(1), "residue(3x) != 1 for w = x^3");
    }
    {
        RingContext ctx = corpus::xy();
        MilnorContext mc = MilnorContext::build(ctx);
        Polynomial one = Polynomial::constant(ctx.vars, Rat(1));
        c.expect(residue(one, mc) == Rat(-1), "residue(1) != -1 for w = xy");
    }
}

// 4. Cohomology dimensions against the closed form for A_k.
void crit_cohomology(Checker& c)
{
    for (int k = 1; k <= 4; ++k) {
        RingContext ctx = corpus::ak(k);
        MilnorContext mc = MilnorContext::build(ctx);
        for (int a = 1; a <= k; ++a)
            for (int b = 1; b <= k; ++b) {
                MatrixFactorization ea = corpus::ak_mf(ctx, a);
                MatrixFactorization eb = corpus::ak_mf(ctx, b);
                int expected = std::min(std::min(a, b), std::min(k + 1 - a, k + 1 - b));
                CohomologyReport rep = hom_cohomology(ea, eb, mc);
                c.expect(rep.h0 == expected && rep.h1 == expected,
                         "Hom(E_" + num(a) + ", E_" + num(b) + ") over x^" + num(k + 1) +
                             " has dims (" + num(rep.h0) + "," + num(rep.h1) +
                             "), expected " + num(expected));
            }
    }
}

// 5. Gram non-degeneracy and homotopy invariance of the pairing.
void crit_kl(Checker& c)
{
    corpus::Rng rng(1005);
    int exact_tested = 0;

    auto run_entry = [&](const RingContext& ctx, const MatrixFactorization& x,
                         const MatrixFactorization& y, const MilnorContext& mc, int trunc) {
        GramReport g = gram_matrix(x, y, mc, trunc);
        c.expect(g.nondegenerate, "degenerate Gram matrix over w = " + ctx.w.to_string());

        PowerWitness w = power_witness(mc);
        std::vector<const Morphism*> closed;
        for (const Morphism& m : g.hom_yx.reps_even)
            closed.push_back(&m);
        for (const Morphism& m : g.hom_yx.reps_odd)
            closed.push_back(&m);
        for (int round = 0; round < 2; ++round) {
            for (Parity par : {Parity::Even, Parity::Odd}) {
                Morphism h = corpus::random_morphism(rng, x, y, par);
                Morphism dh = hom_differential(h);
                for (const Morphism* gm : closed) {
                    c.expect(kl_pairing_with_witness(dh, *gm, mc, w) == Rat(0),
                             "pairing of exact against closed is nonzero over w = " +
                                 ctx.w.to_string());
                    ++exact_tested;
                }
            }
        }
    };

    for (int k = 1; k <= 4; ++k) {
        RingContext ctx = corpus::ak(k);
        MilnorContext mc = MilnorContext::build(ctx);
        for (int a = 1; a <= k; ++a)
            for (int b = 1; b <= k; ++b)
                run_entry(ctx, corpus::ak_mf(ctx, a), corpus::ak_mf(ctx, b), mc, 0);
    }
    {
        RingContext ctx = corpus::xy();
        MilnorContext mc = MilnorContext::build(ctx);
        run_entry(ctx, corpus::xy_mf(ctx), corpus::xy_mf(ctx), mc, 0);
    }
    {
        RingContext ctx = corpus::cube();
        MilnorContext mc = MilnorContext::build(ctx);
        run_entry(ctx, corpus::cube_mf(ctx), corpus::cube_mf(ctx), mc, 6);
    }
    c.expect(exact_tested >= 100, "fewer than 100 exact/closed pairs exercised");
}

// 6. Boundary-bulk vanishes on exact morphisms; Chern additivity and shift.
void crit_bulk(Checker& c)
{
    corpus::Rng rng(1006);
    auto run_entry = [&](const MatrixFactorization& e, const MilnorContext& mc) {
        for (int t = 0; t < 100; ++t) {
            Parity par = t % 2 == 0 ? Parity::Even : Parity::Odd;
            Morphism g = corpus::random_morphism(rng, e, e, par);
            MilnorElement val = boundary_bulk(hom_differential(g), mc);
            c.expect(val.is_zero(), "boundary-bulk of an exact morphism is nonzero over " +
                                        e.ctx.w.to_string());
        }
        MilnorElement ch_e = chern(e, mc);
        MilnorElement ch_sum = chern(direct_sum(e, e), mc);
        c.expect(ch_sum == milnor_scale(ch_e, Rat(2)),
                 "ch(E+E) != 2 ch(E) over " + e.ctx.w.to_string());
        MilnorElement ch_shift = chern(shift(e), mc);
        c.expect(ch_shift == milnor_scale(ch_e, Rat(-1)),
                 "ch(E[1]) != -ch(E) over " + e.ctx.w.to_string());
    };
    for (int k = 1; k <= 3; ++k) {
        RingContext ctx = corpus::ak(k);
        MilnorContext mc = MilnorContext::build(ctx);
        for (int a = 1; a <= k; ++a)
            run_entry(corpus::ak_mf(ctx, a), mc);
    }
    {
        RingContext ctx = corpus::xy();
        run_entry(corpus::xy_mf(ctx), MilnorContext::build(ctx));
    }
    {
        RingContext ctx = corpus::cube();
        run_entry(corpus::cube_mf(ctx), MilnorContext::build(ctx));
    }
}

// 7. Hirzebruch-Riemann-Roch on corpus pairs including sums and shifts.
void crit_hrr(Checker& c)
{
    auto check_pair = [&](const MatrixFactorization& x, const MatrixFactorization& y,
                          const MilnorContext& mc, int trunc) {
        HrrReport rep = hrr_check(x, y, mc, trunc);
        c.expect(rep.match, "HRR mismatch over w = " + x.ctx.w.to_string() + ": chi = " +
                                num(rep.chi) + ", pairing = " + rep.pairing.to_string());
    };
    for (int k = 1; k <= 3; ++k) {
        RingContext ctx = corpus::ak(k);
        MilnorContext mc = MilnorContext::build(ctx);
        std::vector<MatrixFactorization> objs;
        for (int a = 1; a <= k; ++a)
            objs.push_back(corpus::ak_mf(ctx, a));
        objs.push_back(direct_sum(objs[0], objs.back()));
        objs.push_back(shift(objs[0]));
        for (const auto& x : objs)
            for (const auto& y : objs)
                check_pair(x, y, mc, 0);
    }
    {
        RingContext ctx = corpus::xy();
        MilnorContext mc = MilnorContext::build(ctx);
        MatrixFactorization e = corpus::xy_mf(ctx);
        std::vector<MatrixFactorization> objs = {e, direct_sum(e, e), shift(e)};
        for (const auto& x : objs)
            for (const auto& y : objs)
                check_pair(x, y, mc, 0);
    }
    {
        RingContext ctx = corpus::cube();
        MilnorContext mc = MilnorContext::build(ctx);
        MatrixFactorization e = corpus::cube_mf(ctx);
        check_pair(e, e, mc, 6);
        check_pair(e, shift(e), mc, 6);
    }
}

// 8. Koszul homotopy property suite for n = 1, 2, 3.
void crit_koszul(Checker& c)
{
    std::vector<RingContext> rings = {corpus::ak(2), corpus::cube(),
                                      make_ring({"x", "y", "z"}, "x^3 + y^3 + z^3")};
    for (const RingContext& ctx : rings) {
        KoszulSuiteResult res = koszul_property_suite(ctx, 200, 1008);
        c.expect(res.anticommute, "h_i anticommutation fails at n = " + num(res.n));
        c.expect(res.taylor, "Taylor property fails at n = " + num(res.n));
        c.expect(res.commute_with_p, "h_i P != P h_i at n = " + num(res.n));
        c.expect(res.projection, "projection property fails at n = " + num(res.n));
        c.expect(res.contraction, "contraction identities fail at n = " + num(res.n));
        c.expect(res.recursion_matches_explicit,
                 "recursive and explicit H disagree at n = " + num(res.n));
        c.expect(res.pr_chain_map, "pr_i is not a chain map at n = " + num(res.n));
        c.expect(res.delta_stab_ok, "stabilized diagonal checks fail at n = " + num(res.n));
    }
}

// 9. Perturbed retract identities for the stabilized diagonal.
void crit_bpl(Checker& c)
{
    std::vector<MatrixFactorization> mfs;
    for (int k = 1; k <= 3; ++k) {
        RingContext ctx = corpus::ak(k);
        for (int a = 1; a <= k; ++a)
            mfs.push_back(corpus::ak_mf(ctx, a));
    }
    {
        RingContext ctx = corpus::xy();
        mfs.push_back(corpus::xy_mf(ctx));
    }
    {
        RingContext ctx = corpus::cube();
        mfs.push_back(corpus::cube_mf(ctx));
    }
    for (const MatrixFactorization& e : mfs) {
        try {
            DeltaStabRetract r = make_delta_stab_retract(e, 4);
            bpl_perturb(r.datum, r.delta); // verifies all identities post hoc
        } catch (const Error& err) {
            c.expect(false, std::string("BPL identities fail over w = ") +
                                e.ctx.w.to_string() + ": " + err.what());
        }
    }
}

// 10. eta_n theorem on every corpus factorization with n <= 2, rank <= 2.
void crit_eta(Checker& c)
{
    std::vector<MatrixFactorization> mfs;
    for (int k = 1; k <= 5; ++k) {
        RingContext ctx = corpus::ak(k);
        for (int a = 1; a <= k; ++a)
            mfs.push_back(corpus::ak_mf(ctx, a));
    }
    {
        RingContext ctx = corpus::xy();
        mfs.push_back(corpus::xy_mf(ctx));
    }
    {
        RingContext ctx = corpus::cube();
        mfs.push_back(corpus::cube_mf(ctx));
    }
    for (const MatrixFactorization& e : mfs) {
        EtaReport rep = eta_check(e);
        c.expect(rep.pass, "eta check fails over w = " + e.ctx.w.to_string());
    }
}

// 11. Optimized wedge equals the naive n!-permutation sum.
void crit_wedge_oracle(Checker& c)
{
    corpus::Rng rng(1011);
    std::vector<MatrixFactorization> mfs;
    for (int k = 1; k <= 5; ++k) {
        RingContext ctx = corpus::ak(k);
        for (int a = 1; a <= k; ++a)
            mfs.push_back(corpus::ak_mf(ctx, a));
    }
    {
        RingContext ctx = corpus::xy();
        mfs.push_back(corpus::xy_mf(ctx));
    }
    {
        RingContext ctx = corpus::cube();
        mfs.push_back(corpus::cube_mf(ctx));
    }
    for (int t = 0; t < 50; ++t)
        mfs.push_back(corpus::random_mf(rng));
    for (const MatrixFactorization& e : mfs)
        c.expect(dq_wedge(e) == dq_wedge_naive(e),
                 "wedge paths disagree over w = " + e.ctx.w.to_string());
}

} // namespace

std::vector<CriterionResult> run_acceptance()
{
    struct Spec {
        int id;
        const char* name;
        double budget;
        std::function<void(Checker&)> run;
    };
    const std::vector<Spec> specs = {
        {1, "mf-validation-leibniz", 1.0, crit_mf_leibniz},
        {2, "milnor-numbers", 5.0, crit_milnor},
        {3, "residue-suite", 10.0, crit_residue},
        {4, "cohomology-oracle", 60.0, crit_cohomology},
        {5, "kl-nondegeneracy", 60.0, crit_kl},
        {6, "boundary-bulk", 30.0, crit_bulk},
        {7, "hirzebruch-riemann-roch", 60.0, crit_hrr},
        {8, "koszul-homotopy-suite", 30.0, crit_koszul},
        {9, "bpl-side-conditions", 30.0, crit_bpl},
        {10, "eta-theorem", 120.0, crit_eta},
        {11, "wedge-oracle-equivalence", 30.0, crit_wedge_oracle},
    };

    std::vector<CriterionResult> results;
    for (const Spec& s : specs) {
        CriterionResult r;
        r.id = s.id;
        r.name = s.name;
        r.budget_seconds = s.budget;
        Checker c;
        auto start = Clock::now();
        try {
            s.run(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (c.ok && r.seconds > s.budget) {
            c.ok = false;
            c.detail = "runtime budget exceeded";
        }
        r.pass = c.ok;
        r.detail = c.detail;
        results.push_back(std::move(r));
    }
    return results;
}

std::string format_criterion_line(const CriterionResult& r)
{
    std::ostringstream os;
    os << "[" << (r.id < 10 ? " " : "") << r.id << "/11] " << (r.pass ? "PASS" : "FAIL")
       << "  " << r.name;
    for (size_t i = r.name.size(); i < 28; ++i)
        os << ' ';
    char buf[64];
    std::snprintf(buf, sizeof(buf), "(%.2fs of %.0fs)", r.seconds, r.budget_seconds);
    os << buf;
    if (!r.pass && !r.detail.empty())
        os << "  -- " << r.detail;
    return os.str();
}

} // namespace mfwb
