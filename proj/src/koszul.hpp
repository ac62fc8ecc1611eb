#pragma once

#include <memory>

#include "mfcore.hpp"

namespace mfwb {

// Doubled ring R~ = k[x_1..x_n, y_1..y_n] with w~ = w(y) - w(x) and the
// diagonal differences Delta_i = y_i - x_i. Variable i of the base ring sits
// at index i (x-side) and n+i (y-side).
struct DoubledContext {
    RingContext base;
    VarsPtr dvars;
    int n = 0;
    Polynomial wt;
    std::vector<Polynomial> delta;

    int x_index(int i) const { return i; }
    int y_index(int i) const { return n + i; }

    Polynomial inject_x(const Polynomial& p) const;
    Polynomial inject_y(const Polynomial& p) const;
    Polynomial sub_yx(const Polynomial& p, int i) const; // y_i -> x_i
    Polynomial sub_xy(const Polynomial& p, int i) const; // x_i -> y_i
    Polynomial sub_all_yx(const Polynomial& p) const;
    // Requires p free of y-variables.
    Polynomial to_base(const Polynomial& p) const;
};

using DoubledPtr = std::shared_ptr<const DoubledContext>;
DoubledPtr make_doubled(const RingContext& base);

// Unique decomposition f = f0 + Delta_i f1 with f0 free of y_i; f0 is f with
// y_i substituted by x_i and the division is exact by construction.
std::pair<Polynomial, Polynomial> divide_without_remainder(const DoubledContext& dc,
                                                           const Polynomial& f, int i);

// Element of R~<theta_1..theta_n>: subset-indexed coefficients, theta's kept
// in increasing order.
class ThetaForm {
public:
    ThetaForm() = default;
    explicit ThetaForm(DoubledPtr dc) : dc_(std::move(dc)) {}
    static ThetaForm term(DoubledPtr dc, unsigned mask, Polynomial coeff);

    const DoubledPtr& dc() const { return dc_; }
    const std::map<unsigned, Polynomial>& components() const { return comps_; }
    Polynomial component(unsigned mask) const;
    bool is_zero() const { return comps_.empty(); }
    // Degree of a homogeneous form (theta count); -1 when mixed or zero.
    int homogeneous_theta_degree() const;

    ThetaForm operator-() const;
    friend ThetaForm operator+(ThetaForm a, const ThetaForm& b);
    friend ThetaForm operator-(ThetaForm a, const ThetaForm& b);
    ThetaForm scaled(const Rat& c) const;
    ThetaForm scaled_poly(const Polynomial& p) const;

    friend bool operator==(const ThetaForm& a, const ThetaForm& b)
    {
        return a.comps_ == b.comps_;
    }
    friend bool operator!=(const ThetaForm& a, const ThetaForm& b) { return !(a == b); }

    void add_component(unsigned mask, const Polynomial& coeff);

private:
    DoubledPtr dc_;
    std::map<unsigned, Polynomial> comps_;
};

// Koszul sign for moving an odd symbol past the thetas of `mask` below i.
inline int theta_sign(unsigned mask, int i)
{
    return __builtin_popcount(mask & ((1u << i) - 1u)) % 2 == 0 ? 1 : -1;
}

// Atomic homotopy h_i: division by Delta_i without remainder, extended with
// Koszul signs; annihilates multiples of theta_i.
ThetaForm koszul_h(const ThetaForm& w, int i);
// Chain map pr_i: substitute y_i -> x_i and delete theta_i multiples.
ThetaForm koszul_pr(const ThetaForm& w, int i);
// Left exterior multiplication by theta_i.
ThetaForm wedge_theta(const ThetaForm& w, int i);
// Koszul differential: contraction with sum_i Delta_i theta_i^.
ThetaForm iota_delta(const ThetaForm& w);
// Left multiplication by lambda = sum_i w_i theta_i.
ThetaForm eps_lambda(const ThetaForm& w, const std::vector<Polynomial>& w_coeffs);

// Iterated projection P = sum_l a(l) sum_{j_1<..<j_l} pr_{j_1}..pr_{j_l},
// a(l) = 1/((n-l) binom(n,l)).
ThetaForm big_P(const ThetaForm& w);
// Canonical contracting homotopy, by the recursion H = h + (1/n) sum_i H' pr_i.
ThetaForm big_H(const ThetaForm& w);
// Same operator through the closed formula (h_1 + .. + h_n) P.
ThetaForm big_H_explicit(const ThetaForm& w);

// Stabilized diagonal: twisted differential iota_Delta + eps_lambda on
// R~<theta> with the canonical choice lambda = H(w~).
struct DeltaStab {
    DoubledPtr dc;
    std::vector<Polynomial> w_coeffs;
    ThetaForm lambda;
};

DeltaStab delta_stab(const DoubledPtr& dc);
ThetaForm twisted_differential(const DeltaStab& ds, const ThetaForm& w);

// Theta form with supermatrix coefficients: the receptacle for
// Hom(E_y, E_x) tensor R~<theta>. Coefficient matrices are endo-shaped of
// rank (r|r) over the doubled ring; odd operators acquire a (-1)^{|M|} from
// passing the matrix factor.
class MatThetaForm {
public:
    MatThetaForm() = default;
    MatThetaForm(DoubledPtr dc, int r) : dc_(std::move(dc)), r_(r) {}
    static MatThetaForm term(DoubledPtr dc, unsigned mask, SuperMatrix m);

    const DoubledPtr& dc() const { return dc_; }
    int rank() const { return r_; }
    const std::map<unsigned, SuperMatrix>& components() const { return comps_; }
    SuperMatrix component(unsigned mask) const;
    bool is_zero() const { return comps_.empty(); }

    MatThetaForm operator-() const;
    friend MatThetaForm operator+(MatThetaForm a, const MatThetaForm& b);
    friend MatThetaForm operator-(MatThetaForm a, const MatThetaForm& b);
    MatThetaForm scaled(const Rat& c) const;

    friend bool operator==(const MatThetaForm& a, const MatThetaForm& b)
    {
        return a.comps_ == b.comps_;
    }

    void add_component(unsigned mask, const SuperMatrix& m);

private:
    DoubledPtr dc_;
    int r_ = 0;
    std::map<unsigned, SuperMatrix> comps_;
};

MatThetaForm mat_h(const MatThetaForm& v, int i);
MatThetaForm mat_pr(const MatThetaForm& v, int i);
MatThetaForm mat_big_P(const MatThetaForm& v);
MatThetaForm mat_big_H(const MatThetaForm& v);
MatThetaForm mat_iota_delta(const MatThetaForm& v);
MatThetaForm mat_eps_lambda(const MatThetaForm& v, const DeltaStab& ds);
// d_Q(M x eta) = (Q_x M - (-1)^{|M|} M Q_y) x eta.
MatThetaForm mat_dq(const MatThetaForm& v, const SuperMatrix& qx, const SuperMatrix& qy);

// eta_n theorem check: iota_infty(id) = sum_{k<=n} (-H delta)^k iota(id)
// with delta = d_Q + eps_lambda; the top form coefficient must reduce to
// (-1)^{binom(n+1,2)} (1/n!) (dQ)^n modulo (Delta_1, ..., Delta_n).
struct EtaReport {
    bool pass = false;
    MatThetaForm eta;        // the full form iota_infty(id)
    PolyMat eta_top_reduced; // over the base ring
    PolyMat reference;       // over the base ring
};

EtaReport eta_check(const MatrixFactorization& e, bool use_naive_wedge = false);

} // namespace mfwb

#include "bpl.hpp"

namespace mfwb {

// Deformation retract contracting Hom(E_y, E_x) tensor R~<theta> with the
// Koszul differential onto Hom(E, E), homotopy -H, together with the
// perturbation delta = d_Q + eps_lambda of the stabilized diagonal.
// Identities are verified on matrix-unit monomial forms of total degree <=
// trunc_degree.
struct DeltaStabRetract {
    DoubledPtr dc;
    DeltaStab ds;
    SuperMatrix qx, qy;
    RetractDatum<MatThetaForm> datum;
    std::function<MatThetaForm(const MatThetaForm&)> delta;
};

DeltaStabRetract make_delta_stab_retract(const MatrixFactorization& e, int trunc_degree);

// Property suite for the canonical homotopy on random forms: h_i
// anticommutation, the Taylor rule mod Delta_i, commutation with P, the
// projection property of P, the contraction identities, agreement of the
// recursive and explicit H, and pr_i being a chain map.
struct KoszulSuiteResult {
    int n = 0;
    int forms = 0;
    bool anticommute = true;
    bool taylor = true;
    bool commute_with_p = true;
    bool projection = true;
    bool contraction = true;
    bool recursion_matches_explicit = true;
    bool pr_chain_map = true;
    bool delta_stab_ok = true;

    bool all() const
    {
        return anticommute && taylor && commute_with_p && projection && contraction &&
               recursion_matches_explicit && pr_chain_map && delta_stab_ok;
    }
};

KoszulSuiteResult koszul_property_suite(const RingContext& ctx, int forms, unsigned seed);

} // namespace mfwb
