#pragma once

#include "klpair.hpp"

namespace mfwb {

// Element of the Milnor algebra presented by coordinates over the monomial
// basis of a MilnorContext.
struct MilnorElement {
    std::vector<Rat> coords;

    bool is_zero() const
    {
        for (const Rat& c : coords)
            if (!c.is_zero())
                return false;
        return true;
    }

    friend bool operator==(const MilnorElement& a, const MilnorElement& b)
    {
        return a.coords == b.coords;
    }
};

MilnorElement milnor_add(const MilnorElement& a, const MilnorElement& b);
MilnorElement milnor_scale(const MilnorElement& a, const Rat& c);
MilnorElement milnor_mul(const MilnorElement& a, const MilnorElement& b,
                         const MilnorContext& mc);

// F |-> class of (-1)^{binom(n+1,2)} (1/n!) str(F (dQ)^n) in the Milnor
// algebra, for an endomorphism F of a single factorization. Well defined on
// cohomology; callers wanting the class should pass closed F.
MilnorElement boundary_bulk(const Morphism& f, const MilnorContext& mc,
                            bool use_naive_wedge = false);

// Chern character ch(E) = boundary_bulk(id_E).
MilnorElement chern(const MatrixFactorization& e, const MilnorContext& mc,
                    bool use_naive_wedge = false);

// Sign calibrating the residue pairing on the Milnor algebra.
inline Rat hrr_sign(int n)
{
    return (n * (n - 1) / 2) % 2 == 0 ? Rat(1) : Rat(-1);
}

// <a, b> = (-1)^{n(n-1)/2} Res[ lift(a) lift(b) / d_1 w, ..., d_n w ].
Rat milnor_pairing(const MilnorElement& a, const MilnorElement& b, const MilnorContext& mc);

struct HrrReport {
    int chi = 0;
    Rat pairing;
    bool match = false;
    MilnorElement ch_x, ch_y;
};

// Riemann-Roch check: chi Hom(X, Y) against <ch X, ch Y>, both sides exact.
HrrReport hrr_check(const MatrixFactorization& x, const MatrixFactorization& y,
                    const MilnorContext& mc, int trunc0 = 0, int cap = 40,
                    bool use_naive_wedge = false);

} // namespace mfwb
