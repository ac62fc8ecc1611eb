#pragma once

#include <array>

#include "mfcore.hpp"
#include "milnor.hpp"

namespace mfwb {

// Cohomology of the Z/2-graded Hom complex between two matrix
// factorizations, computed by truncated linear algebra. `dims_window` holds
// the (h0, h1) pairs at the three consecutive truncation degrees that
// certified stabilization; every representative is exactly d-closed.
struct CohomologyReport {
    int h0 = 0, h1 = 0;
    std::vector<Morphism> reps_even, reps_odd;
    int trunc_used = 0; // first degree of the accepted window
    std::array<std::pair<int, int>, 3> dims_window{};
    std::vector<std::pair<int, std::pair<int, int>>> trajectory; // (D, (h0,h1))
};

// trunc0 <= 0 selects the default initial truncation 2*mu + 2.
CohomologyReport hom_cohomology(const MatrixFactorization& x, const MatrixFactorization& y,
                                const MilnorContext& mc, int trunc0 = 0, int cap = 40);

int euler_characteristic(const MatrixFactorization& x, const MatrixFactorization& y,
                         const MilnorContext& mc);

} // namespace mfwb
