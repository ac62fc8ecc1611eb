#include "klpair.hpp"

#include "error.hpp"

namespace mfwb {

Rat kl_pairing_with_witness(const Morphism& f, const Morphism& g, const MilnorContext& mc,
                            const PowerWitness& w, bool use_naive_wedge)
{
    if (!(f.source == g.target) || !(g.source == f.target))
        fail(Errc::validation, "pairing needs F: X -> Y and G: Y -> X");
    if (!f.mat.is_homogeneous() || !g.mat.is_homogeneous())
        fail(Errc::validation, "pairing requires homogeneous morphisms");
    int n = mc.ring().n();
    int fpar = f.parity() == Parity::Odd ? 1 : 0;
    int gpar = g.parity() == Parity::Odd ? 1 : 0;
    if ((fpar + gpar) % 2 != n % 2)
        return Rat(0);

    const MatrixFactorization& y = f.target;
    SuperMatrix wedge = use_naive_wedge ? dq_wedge_naive(y) : dq_wedge(y);
    Polynomial tr = supertrace(f.mat * g.mat * wedge);
    Rat value = residue_with_witness(tr, mc, w);
    return kl_sign(n) * value / factorial(n);
}

Rat kl_pairing(const Morphism& f, const Morphism& g, const MilnorContext& mc,
               bool use_naive_wedge)
{
    return kl_pairing_with_witness(f, g, mc, power_witness(mc), use_naive_wedge);
}

GramReport gram_matrix(const MatrixFactorization& x, const MatrixFactorization& y,
                       const MilnorContext& mc, int trunc0, int cap, bool use_naive_wedge)
{
    GramReport rep;
    rep.hom_xy = hom_cohomology(x, y, mc, trunc0, cap);
    rep.hom_yx = hom_cohomology(y, x, mc, trunc0, cap);

    std::vector<const Morphism*> rows, cols;
    for (const Morphism& m : rep.hom_xy.reps_even) {
        rows.push_back(&m);
        rep.row_parities.push_back(Parity::Even);
    }
    for (const Morphism& m : rep.hom_xy.reps_odd) {
        rows.push_back(&m);
        rep.row_parities.push_back(Parity::Odd);
    }
    for (const Morphism& m : rep.hom_yx.reps_even) {
        cols.push_back(&m);
        rep.col_parities.push_back(Parity::Even);
    }
    for (const Morphism& m : rep.hom_yx.reps_odd) {
        cols.push_back(&m);
        rep.col_parities.push_back(Parity::Odd);
    }

    if (rows.size() != cols.size()) {
        // Dimension mismatch already rules out a perfect pairing.
        rep.matrix = QMat(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        rep.determinant = Rat(0);
        rep.nondegenerate = false;
        return rep;
    }

    PowerWitness w = power_witness(mc);
    rep.matrix = QMat(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            rep.matrix.at(static_cast<int>(i), static_cast<int>(j)) =
                kl_pairing_with_witness(*rows[i], *cols[j], mc, w, use_naive_wedge);
    rep.determinant = rows.empty() ? Rat(1) : rep.matrix.det();
    rep.nondegenerate = !rep.determinant.is_zero();
    return rep;
}

} // namespace mfwb
