#pragma once

#include "superlin.hpp"

namespace mfwb {

// Matrix factorization (phi, psi) of the potential: phi*psi = psi*phi = w*I.
// The twisted differential Q = [[0, phi],[psi, 0]] is odd of rank (r|r).
struct MatrixFactorization {
    RingContext ctx;
    PolyMat phi, psi;
    int rank = 0;

    SuperMatrix Q() const;

    friend bool operator==(const MatrixFactorization& a, const MatrixFactorization& b)
    {
        return same_vars(a.ctx.vars, b.ctx.vars) && a.ctx.w == b.ctx.w && a.phi == b.phi &&
               a.psi == b.psi;
    }
};

// Checks phi*psi = psi*phi = w*I exactly; reports the first offending entry.
MatrixFactorization validate_mf(const RingContext& ctx, PolyMat phi, PolyMat psi,
                                const std::string& name = "");

// Morphism of matrix factorizations: a graded matrix shaped target x source.
struct Morphism {
    MatrixFactorization source, target;
    SuperMatrix mat;

    Parity parity() const { return mat.parity(); }
    bool is_endomorphism() const { return source == target; }
};

Morphism make_morphism(MatrixFactorization source, MatrixFactorization target,
                       SuperMatrix mat);
Morphism identity_morphism(const MatrixFactorization& e);
Morphism zero_morphism(const MatrixFactorization& source, const MatrixFactorization& target,
                       Parity parity);

// d(F) = Q_target F - (-1)^{|F|} F Q_source; parity flips, d^2 = 0.
Morphism hom_differential(const Morphism& f);
bool is_closed(const Morphism& f);

Morphism operator+(const Morphism& a, const Morphism& b);
Morphism operator-(const Morphism& a, const Morphism& b);
// Composition f after g (matrix product f.mat * g.mat).
Morphism compose(const Morphism& f, const Morphism& g);
Morphism scale(const Morphism& f, const Rat& c);
Morphism scale_poly(const Morphism& f, const Polynomial& p);

// Antisymmetrized derivative product
//   (dQ)^n = sum_{sigma in S_n} sign(sigma) d_{sigma(1)}Q ... d_{sigma(n)}Q.
// The default path shares suffix subproducts over index subsets; the naive
// path sums all n! permutations literally and serves as the oracle.
SuperMatrix dq_wedge(const MatrixFactorization& x);
SuperMatrix dq_wedge_naive(const MatrixFactorization& x);

MatrixFactorization direct_sum(const MatrixFactorization& a, const MatrixFactorization& b);

// Shift [1]: swaps the graded summands and negates, (phi, psi) -> (-psi, -phi).
MatrixFactorization shift(const MatrixFactorization& x);

} // namespace mfwb
