#include "cohomology.hpp"

#include <algorithm>

#include "error.hpp"
#include "linalg.hpp"

namespace mfwb {

namespace {

// Coordinate chart for the parity component of Hom(X, Y) with entries of
// total degree < bound: positions run over the entry slots of that parity,
// monomials over degree < bound.
struct Chart {
    std::vector<std::pair<int, int>> slots; // (row, col) in the 2r x 2r grid
    std::vector<Exps> monomials;
    std::map<Exps, int, GrlexLess> monomial_index;
    int rows = 0, cols_src = 0;

    int dim() const { return static_cast<int>(slots.size() * monomials.size()); }
    int index(int slot, int mono) const
    {
        return slot * static_cast<int>(monomials.size()) + mono;
    }
};

Chart make_chart(const MatrixFactorization& x, const MatrixFactorization& y, Parity parity,
                 int bound)
{
    Chart ch;
    int rows = 2 * y.rank, cols = 2 * x.rank;
    bool want_odd = parity == Parity::Odd;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            bool odd = (r >= y.rank) != (c >= x.rank);
            if (odd == want_odd)
                ch.slots.emplace_back(r, c);
        }
    ch.monomials = monomials_below_degree(x.ctx.n(), bound);
    for (int k = 0; k < static_cast<int>(ch.monomials.size()); ++k)
        ch.monomial_index.emplace(ch.monomials[k], k);
    return ch;
}

SuperMatrix from_coords(const MatrixFactorization& x, const MatrixFactorization& y,
                        Parity parity, const Chart& ch, const SparseVec& v)
{
    SuperMatrix m(x.ctx.vars, y.rank, y.rank, x.rank, x.rank, parity);
    int nm = static_cast<int>(ch.monomials.size());
    for (const auto& [idx, c] : v) {
        auto [r, cpos] = ch.slots[idx / nm];
        m.at(r, cpos).add_term(ch.monomials[idx % nm], c);
    }
    return m;
}

// Expands d(slot e_m) over the target chart. The target chart must be wide
// enough to hold every monomial of the image exactly.
SparseVec image_coords(const SuperMatrix& d, const Chart& target)
{
    SparseVec v;
    int nm = static_cast<int>(target.monomials.size());
    for (int s = 0; s < static_cast<int>(target.slots.size()); ++s) {
        auto [r, c] = target.slots[s];
        for (const auto& [e, coeff] : d.at(r, c).terms()) {
            auto it = target.monomial_index.find(e);
            if (it == target.monomial_index.end())
                fail(Errc::compute, "cohomology target chart too small");
            v[s * nm + it->second] = coeff;
        }
    }
    return v;
}

struct ParityResult {
    int dim = 0;
    std::vector<Morphism> reps;
};

ParityResult parity_cohomology(const MatrixFactorization& x, const MatrixFactorization& y,
                               Parity parity, int trunc, int deg_q)
{
    Parity other = parity == Parity::Even ? Parity::Odd : Parity::Even;
    Chart src = make_chart(x, y, parity, trunc);
    Chart tgt = make_chart(x, y, other, trunc + deg_q);

    auto d_of = [&](Parity p, const Chart& chart, int slot, int mono) {
        SuperMatrix m(x.ctx.vars, y.rank, y.rank, x.rank, x.rank, p);
        auto [r, c] = chart.slots[slot];
        m.at(r, c) = Polynomial::monomial(x.ctx.vars, chart.monomials[mono], Rat(1));
        Morphism f = make_morphism(x, y, std::move(m));
        return hom_differential(f).mat;
    };

    // Exact kernel: images are expanded over the untruncated target degree.
    std::vector<SparseVec> images;
    images.reserve(src.dim());
    int nm = static_cast<int>(src.monomials.size());
    for (int s = 0; s < static_cast<int>(src.slots.size()); ++s)
        for (int k = 0; k < nm; ++k)
            images.push_back(image_coords(d_of(parity, src, s, k), tgt));
    std::vector<SparseVec> kernel = sparse_kernel(images);

    // Image of d from sources of degree < trunc - deg_q, in src coordinates.
    SparseEchelon image_span;
    if (trunc - deg_q > 0) {
        Chart low = make_chart(x, y, other, trunc - deg_q);
        int lnm = static_cast<int>(low.monomials.size());
        for (int s = 0; s < static_cast<int>(low.slots.size()); ++s)
            for (int k = 0; k < lnm; ++k)
                image_span.insert(image_coords(d_of(other, low, s, k), src));
    }

    ParityResult out;
    for (const SparseVec& kv : kernel) {
        if (image_span.insert(kv)) {
            SuperMatrix rep = from_coords(x, y, parity, src, kv);
            out.reps.push_back(make_morphism(x, y, std::move(rep)));
        }
    }
    out.dim = static_cast<int>(out.reps.size());
    return out;
}

} // namespace

CohomologyReport hom_cohomology(const MatrixFactorization& x, const MatrixFactorization& y,
                                const MilnorContext& mc, int trunc0, int cap)
{
    if (!same_vars(x.ctx.vars, y.ctx.vars) || x.ctx.w != y.ctx.w)
        fail(Errc::validation, "cohomology endpoints live over different rings");
    if (mc.smooth())
        fail(Errc::compute, "cohomology over a smooth point is trivial; nothing to do");

    int deg_q = std::max({x.phi.max_entry_degree(), x.psi.max_entry_degree(),
                          y.phi.max_entry_degree(), y.psi.max_entry_degree(), 1});
    int d0 = trunc0 > 0 ? trunc0 : 2 * mc.mu() + 2;

    CohomologyReport rep;
    std::map<int, std::pair<ParityResult, ParityResult>> results;
    auto compute_at = [&](int d) -> const std::pair<ParityResult, ParityResult>& {
        auto it = results.find(d);
        if (it != results.end())
            return it->second;
        ParityResult even = parity_cohomology(x, y, Parity::Even, d, deg_q);
        ParityResult odd = parity_cohomology(x, y, Parity::Odd, d, deg_q);
        auto [it2, ok] = results.emplace(d, std::make_pair(std::move(even), std::move(odd)));
        rep.trajectory.emplace_back(
            d, std::make_pair(it2->second.first.dim, it2->second.second.dim));
        return it2->second;
    };

    if (d0 + 2 > cap)
        fail(Errc::compute, "truncation cap " + std::to_string(cap) +
                                " leaves no room for a stabilization window above " +
                                std::to_string(d0));
    for (int d = d0; d + 2 <= cap; ++d) {
        const auto& r0 = compute_at(d);
        const auto& r1 = compute_at(d + 1);
        const auto& r2 = compute_at(d + 2);
        auto dims = [](const std::pair<ParityResult, ParityResult>& r) {
            return std::make_pair(r.first.dim, r.second.dim);
        };
        if (dims(r0) == dims(r1) && dims(r1) == dims(r2)) {
            rep.h0 = r0.first.dim;
            rep.h1 = r0.second.dim;
            rep.reps_even = r0.first.reps;
            rep.reps_odd = r0.second.reps;
            rep.trunc_used = d;
            rep.dims_window = {dims(r0), dims(r1), dims(r2)};
            return rep;
        }
    }
    std::string traj;
    for (const auto& [d, hs] : rep.trajectory)
        traj += " D=" + std::to_string(d) + ":(" + std::to_string(hs.first) + "," +
                std::to_string(hs.second) + ")";
    fail(Errc::compute, "cohomology dimensions did not stabilize:" + traj);
}

int euler_characteristic(const MatrixFactorization& x, const MatrixFactorization& y,
                         const MilnorContext& mc)
{
    CohomologyReport r = hom_cohomology(x, y, mc);
    return r.h0 - r.h1;
}

} // namespace mfwb
