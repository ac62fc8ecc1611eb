#pragma once

#include <vector>

#include "polyring.hpp"

namespace mfwb {

// Jacobian ideal data for an isolated hypersurface singularity: the monomial
// basis of the Milnor algebra R/(d_1 w, ..., d_n w), the Milnor number and a
// normal-form reducer. Immutable after construction.
class MilnorContext {
public:
    // Row-reduces the span of {x^e * t_j} degree slab by degree slab until
    // the quotient dimension and basis agree across three consecutive
    // degrees. Potentials with a linear part are reported as smooth points
    // (mu = 0, empty basis) rather than errors.
    static MilnorContext build(const RingContext& ctx, int degree_cap = 50);

    const RingContext& ring() const { return ctx_; }
    const std::vector<Polynomial>& jacobian() const { return jacobian_; }
    int mu() const { return static_cast<int>(basis_.size()); }
    const std::vector<Exps>& basis() const { return basis_; }
    Polynomial basis_monomial(int k) const;
    bool smooth() const { return smooth_; }
    int stabilized_degree() const { return stabilized_degree_; }
    const std::vector<std::pair<int, int>>& dimension_trajectory() const
    {
        return trajectory_;
    }

    // Coordinates of p over the basis; p minus the lift of the coordinates
    // lies in the Jacobian ideal.
    std::vector<Rat> normal_form(const Polynomial& p) const;
    Polynomial lift(const std::vector<Rat>& coords) const;

private:
    struct Reducer {
        // pivot monomial -> row with unit pivot coefficient and a tail of
        // strictly smaller non-pivot monomials
        std::map<Exps, Polynomial, GrlexLess> rows;
        int built_degree = 0; // products of degree < built_degree inserted

        void insert(Polynomial p);
        Polynomial reduce(Polynomial p) const;
    };

    static Reducer build_reducer(const RingContext& ctx,
                                 const std::vector<Polynomial>& jacobian, int bound);

    RingContext ctx_;
    std::vector<Polynomial> jacobian_;
    std::vector<Exps> basis_;
    bool smooth_ = false;
    int stabilized_degree_ = 0;
    std::vector<std::pair<int, int>> trajectory_; // (degree, quotient dim)
    Reducer reducer_;
};

std::vector<Polynomial> jacobian(const RingContext& ctx);

} // namespace mfwb
