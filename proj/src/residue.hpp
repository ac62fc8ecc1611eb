#pragma once

#include "milnor.hpp"
#include "superlin.hpp"

namespace mfwb {

// [numerator / t_1, ..., t_n]: a top local-cohomology class presented by a
// system of parameters. Reordering denominators multiplies the class by the
// permutation sign via the transformation rule.
struct GeneralizedFraction {
    Polynomial numerator;
    std::vector<Polynomial> denominators;
};

// Witness for m^N lying in the Jacobian ideal: x_i^N = sum_j C_ij t_j.
struct PowerWitness {
    int N = 0;
    PolyMat C;
};

// Least N admitting a witness, searched by exact linear solves over
// coefficient space; the defining identity is re-verified before returning.
PowerWitness power_witness(const MilnorContext& mc, int n_cap = 0, int slack = 4);
// Witness at a prescribed exponent (used for witness-independence checks).
PowerWitness power_witness_at(const MilnorContext& mc, int N, int slack = 4);

// Transformation rule: [m / t] = [det(C) m / t'] for t'_i = sum_j C_ij t_j.
GeneralizedFraction transform_fraction(const GeneralizedFraction& f, const PolyMat& C);

Polynomial poly_det(const PolyMat& m);

// Grothendieck residue of [g / d_1 w, ..., d_n w]: transform denominators to
// pure powers x_i^N and read off the coefficient of x_1^{N-1}...x_n^{N-1}.
Rat residue(const Polynomial& g, const MilnorContext& mc);
Rat residue_with_witness(const Polynomial& g, const MilnorContext& mc,
                         const PowerWitness& w);

} // namespace mfwb
