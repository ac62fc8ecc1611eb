#include "residue.hpp"

#include "error.hpp"
#include "linalg.hpp"

namespace mfwb {

namespace {

// Solves sum_j C_j t_j = rhs for polynomials C_j supported on monomials of
// degree <= bound; nullopt when the system is inconsistent at this bound.
std::optional<std::vector<Polynomial>> solve_membership(const std::vector<Polynomial>& t,
                                                        const Polynomial& rhs, int bound)
{
    const VarsPtr& vars = rhs.vars();
    int n = static_cast<int>(t.size());
    std::vector<Exps> support = monomials_below_degree(rhs.nvars(), bound + 1);

    // Constraint rows are indexed by target monomials.
    std::map<Exps, int, GrlexLess> row_of;
    auto row_index = [&](const Exps& e) {
        auto [it, inserted] = row_of.emplace(e, static_cast<int>(row_of.size()));
        return it->second;
    };

    std::vector<SparseVec> columns;
    for (int j = 0; j < n; ++j) {
        for (const Exps& e : support) {
            Polynomial prod = Polynomial::monomial(vars, e, Rat(1)) * t[j];
            SparseVec col;
            for (const auto& [m, c] : prod.terms())
                col[row_index(m)] = c;
            columns.push_back(std::move(col));
        }
    }
    SparseVec target;
    for (const auto& [m, c] : rhs.terms())
        target[row_index(m)] = c;

    // Eliminate columns, then try to express the target.
    std::map<int, std::pair<SparseVec, SparseVec>> rows; // lead -> (row, history)
    auto reduce = [&](SparseVec v, SparseVec hist, bool record) -> std::pair<SparseVec, SparseVec> {
        while (!v.empty()) {
            auto it = rows.find(v.begin()->first);
            if (it == rows.end())
                break;
            Rat f = -v.begin()->second;
            sparse_axpy(v, f, it->second.first);
            sparse_axpy(hist, f, it->second.second);
        }
        if (record && !v.empty()) {
            Rat inv = v.begin()->second.inverse();
            SparseVec nv = v, nh = hist;
            for (auto& [i, c] : nv)
                c *= inv;
            for (auto& [i, c] : nh)
                c *= inv;
            int lead = nv.begin()->first;
            rows.emplace(lead, std::make_pair(std::move(nv), std::move(nh)));
        }
        return {std::move(v), std::move(hist)};
    };

    for (int j = 0; j < static_cast<int>(columns.size()); ++j) {
        SparseVec hist;
        hist[j] = Rat(1);
        reduce(std::move(columns[j]), std::move(hist), true);
    }
    auto [rem, hist] = reduce(std::move(target), SparseVec{}, false);
    if (!rem.empty())
        return std::nullopt;

    // target = -hist in column coordinates.
    int per_var = static_cast<int>(support.size());
    std::vector<Polynomial> c(n, Polynomial(vars));
    for (const auto& [col, coeff] : hist) {
        int j = col / per_var;
        const Exps& e = support[col % per_var];
        c[j].add_term(e, -coeff);
    }
    return c;
}

PowerWitness witness_at_impl(const MilnorContext& mc, int N, int slack, bool must_exist)
{
    const RingContext& ctx = mc.ring();
    int n = ctx.n();
    int bound = N * n + slack;
    PolyMat C(ctx.vars, n, n);
    for (int i = 0; i < n; ++i) {
        Polynomial xiN = Polynomial::variable(ctx.vars, i).pow(N);
        auto sol = solve_membership(mc.jacobian(), xiN, bound);
        if (!sol) {
            if (must_exist)
                fail(Errc::compute, "no power witness at N = " + std::to_string(N));
            return PowerWitness{0, PolyMat()};
        }
        for (int j = 0; j < n; ++j)
            C.at(i, j) = (*sol)[j];
    }
    // Verify the defining identity exactly.
    for (int i = 0; i < n; ++i) {
        Polynomial sum(ctx.vars);
        for (int j = 0; j < n; ++j)
            sum += C.at(i, j) * mc.jacobian()[j];
        if (sum != Polynomial::variable(ctx.vars, i).pow(N))
            fail(Errc::compute, "power witness identity failed verification");
    }
    return PowerWitness{N, std::move(C)};
}

} // namespace

PowerWitness power_witness_at(const MilnorContext& mc, int N, int slack)
{
    return witness_at_impl(mc, N, slack, true);
}

PowerWitness power_witness(const MilnorContext& mc, int n_cap, int slack)
{
    if (mc.smooth())
        fail(Errc::compute, "power witness needs a singular potential");
    if (n_cap <= 0)
        n_cap = 2 * mc.mu() + 4;
    for (int N = 1; N <= n_cap; ++N) {
        PowerWitness w = witness_at_impl(mc, N, slack, false);
        if (w.N == N)
            return w;
    }
    fail(Errc::compute, "no power witness up to N = " + std::to_string(n_cap) +
                            " (non-isolated singularity or caps too small)");
}

Polynomial poly_det(const PolyMat& m)
{
    if (m.rows() != m.cols())
        fail(Errc::validation, "determinant of non-square matrix");
    int n = m.rows();
    if (n == 0)
        fail(Errc::validation, "determinant of empty matrix");
    if (n == 1)
        return m.at(0, 0);
    // Cofactor expansion along the first row; fine at these sizes.
    Polynomial det(m.vars());
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero())
            continue;
        PolyMat minor(m.vars(), n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j)
                    continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        Polynomial term = m.at(0, j) * poly_det(minor);
        if (j % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

GeneralizedFraction transform_fraction(const GeneralizedFraction& f, const PolyMat& C)
{
    int n = static_cast<int>(f.denominators.size());
    if (C.rows() != n || C.cols() != n)
        fail(Errc::validation, "transformation matrix shape mismatch");
    GeneralizedFraction out;
    out.numerator = poly_det(C) * f.numerator;
    out.denominators.reserve(n);
    for (int i = 0; i < n; ++i) {
        Polynomial d(f.numerator.vars());
        for (int j = 0; j < n; ++j)
            d += C.at(i, j) * f.denominators[j];
        out.denominators.push_back(std::move(d));
    }
    return out;
}

Rat residue_with_witness(const Polynomial& g, const MilnorContext& mc, const PowerWitness& w)
{
    if (!same_vars(g.vars(), mc.ring().vars))
        fail(Errc::validation, "residue ring context mismatch");
    Polynomial r = poly_det(w.C) * g;
    Exps e(mc.ring().n(), w.N - 1);
    return r.coefficient(e);
}

Rat residue(const Polynomial& g, const MilnorContext& mc)
{
    return residue_with_witness(g, mc, power_witness(mc));
}

} // namespace mfwb
