#pragma once

#include <random>

#include "mfcore.hpp"

namespace mfwb::corpus {

// Standard desk-scale examples used by tests and the acceptance suite.

// w = x^{k+1} on Q[x].
RingContext ak(int k);
// E_a = (x^a, x^{k+1-a}).
MatrixFactorization ak_mf(const RingContext& ctx, int a);

// w = x*y on Q[x,y] with E = (x, y).
RingContext xy();
MatrixFactorization xy_mf(const RingContext& ctx);

// w = x^3 + y^3 on Q[x,y] with the rank-2 Koszul-type factorization.
RingContext cube();
MatrixFactorization cube_mf(const RingContext& ctx);

// w = x^2 + y^3 on Q[x,y].
RingContext x2y3();

// Deterministic random generators for property tests.
using Rng = std::mt19937;

Rat random_rat(Rng& rng, int max_abs = 5);
Polynomial random_poly(Rng& rng, const VarsPtr& vars, int max_degree, int terms,
                       bool allow_zero = true);
// Homogeneous-parity morphism with random entries of bounded degree.
Morphism random_morphism(Rng& rng, const MatrixFactorization& x,
                         const MatrixFactorization& y, Parity parity, int max_degree = 2);
// Random valid factorization over a random ring with at most max_vars
// variables: rank 1 pairs (f, g) with w = f*g or rank 2 adjugate pairs with
// w = det(phi).
MatrixFactorization random_mf(Rng& rng, int max_vars = 3);

} // namespace mfwb::corpus
