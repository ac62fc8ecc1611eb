#pragma once

#include "cohomology.hpp"
#include "linalg.hpp"
#include "residue.hpp"

namespace mfwb {

// Sign (-1)^{binom(n+1,2)} appearing in the duality pairing and the
// boundary-bulk formula.
inline Rat kl_sign(int n)
{
    return ((n + 1) * n / 2) % 2 == 0 ? Rat(1) : Rat(-1);
}

// <F, G> = (-1)^{binom(n+1,2)} (1/n!) Res[ str(F G (dQ)^n) / d_1 w, ..., d_n w ]
// for F: X -> Y and G: Y -> X. The wedge is taken over Q of Y, the
// factorization at which F.G is an endomorphism. Exact zero when the total
// parity |F| + |G| differs from n mod 2.
Rat kl_pairing(const Morphism& f, const Morphism& g, const MilnorContext& mc,
               bool use_naive_wedge = false);
Rat kl_pairing_with_witness(const Morphism& f, const Morphism& g, const MilnorContext& mc,
                            const PowerWitness& w, bool use_naive_wedge = false);

// Pairing matrix between cohomology bases of Hom(X,Y) and Hom(Y,X); rows and
// columns are the even representatives followed by the odd ones, so entries
// vanish outside the parity matching forced by the [n] shift.
struct GramReport {
    QMat matrix;
    Rat determinant;
    bool nondegenerate = false;
    std::vector<Parity> row_parities, col_parities;
    CohomologyReport hom_xy, hom_yx;
};

GramReport gram_matrix(const MatrixFactorization& x, const MatrixFactorization& y,
                       const MilnorContext& mc, int trunc0 = 0, int cap = 40,
                       bool use_naive_wedge = false);

} // namespace mfwb
