#include "bulk.hpp"

#include "error.hpp"

namespace mfwb {

MilnorElement milnor_add(const MilnorElement& a, const MilnorElement& b)
{
    if (a.coords.size() != b.coords.size())
        fail(Errc::validation, "Milnor element size mismatch");
    MilnorElement r = a;
    for (size_t i = 0; i < r.coords.size(); ++i)
        r.coords[i] += b.coords[i];
    return r;
}

MilnorElement milnor_scale(const MilnorElement& a, const Rat& c)
{
    MilnorElement r = a;
    for (Rat& x : r.coords)
        x *= c;
    return r;
}

MilnorElement milnor_mul(const MilnorElement& a, const MilnorElement& b,
                         const MilnorContext& mc)
{
    return MilnorElement{mc.normal_form(mc.lift(a.coords) * mc.lift(b.coords))};
}

MilnorElement boundary_bulk(const Morphism& f, const MilnorContext& mc, bool use_naive_wedge)
{
    if (!f.is_endomorphism())
        fail(Errc::validation, "boundary-bulk map needs an endomorphism");
    if (!same_vars(f.source.ctx.vars, mc.ring().vars))
        fail(Errc::validation, "boundary-bulk ring context mismatch");
    int n = mc.ring().n();
    SuperMatrix wedge = use_naive_wedge ? dq_wedge_naive(f.source) : dq_wedge(f.source);
    Polynomial tr = supertrace(f.mat * wedge);
    Polynomial scaled = tr.scaled(kl_sign(n) / factorial(n));
    return MilnorElement{mc.normal_form(scaled)};
}

MilnorElement chern(const MatrixFactorization& e, const MilnorContext& mc,
                    bool use_naive_wedge)
{
    return boundary_bulk(identity_morphism(e), mc, use_naive_wedge);
}

Rat milnor_pairing(const MilnorElement& a, const MilnorElement& b, const MilnorContext& mc)
{
    Polynomial prod = mc.lift(a.coords) * mc.lift(b.coords);
    return hrr_sign(mc.ring().n()) * residue(prod, mc);
}

HrrReport hrr_check(const MatrixFactorization& x, const MatrixFactorization& y,
                    const MilnorContext& mc, int trunc0, int cap, bool use_naive_wedge)
{
    HrrReport rep;
    CohomologyReport hom = hom_cohomology(x, y, mc, trunc0, cap);
    rep.chi = hom.h0 - hom.h1;
    rep.ch_x = chern(x, mc, use_naive_wedge);
    rep.ch_y = chern(y, mc, use_naive_wedge);
    rep.pairing = milnor_pairing(rep.ch_x, rep.ch_y, mc);
    rep.match = rep.pairing == Rat(rep.chi);
    return rep;
}

} // namespace mfwb
