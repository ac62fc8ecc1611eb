#include "milnor.hpp"

#include <algorithm>
#include <set>

#include "error.hpp"

namespace mfwb {

std::vector<Polynomial> jacobian(const RingContext& ctx)
{
    std::vector<Polynomial> t;
    t.reserve(ctx.n());
    for (int i = 0; i < ctx.n(); ++i)
        t.push_back(ctx.w.derivative(i));
    return t;
}

void MilnorContext::Reducer::insert(Polynomial p)
{
    p = reduce(std::move(p));
    if (p.is_zero())
        return;
    Exps lead = p.leading_monomial();
    p = p.scaled(p.leading_coefficient().inverse());
    // Keep tails pivot-free: eliminate the new pivot from existing rows.
    for (auto& [pivot, row] : rows) {
        Rat c = row.coefficient(lead);
        if (!c.is_zero())
            row -= p.scaled(c);
    }
    rows.emplace(std::move(lead), std::move(p));
}

Polynomial MilnorContext::Reducer::reduce(Polynomial p) const
{
    while (true) {
        const Exps* hit = nullptr;
        Rat c;
        for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
            if (rows.count(it->first)) {
                hit = &it->first;
                c = it->second;
                break;
            }
        }
        if (!hit)
            return p;
        p -= rows.at(*hit).scaled(c);
    }
}

MilnorContext::Reducer MilnorContext::build_reducer(const RingContext& ctx,
                                                    const std::vector<Polynomial>& jac,
                                                    int bound)
{
    Reducer red;
    red.built_degree = bound;
    for (int d = 0; d < bound; ++d) {
        for (const Polynomial& t : jac) {
            int td = t.degree();
            if (td < 0 || td > d)
                continue;
            for (const Exps& e : monomials_of_degree(ctx.n(), d - td))
                red.insert(Polynomial::monomial(ctx.vars, e, Rat(1)) * t);
        }
    }
    return red;
}

MilnorContext MilnorContext::build(const RingContext& ctx, int degree_cap)
{
    MilnorContext mc;
    mc.ctx_ = ctx;
    mc.jacobian_ = mfwb::jacobian(ctx);

    // Nonzero linear part means the hypersurface is smooth at the origin.
    for (const Exps& e : monomials_of_degree(ctx.n(), 1)) {
        if (!ctx.w.coefficient(e).is_zero()) {
            mc.smooth_ = true;
            return mc;
        }
    }

    Reducer red;
    std::vector<int> counts;
    std::vector<std::set<Exps, GrlexLess>> bases;
    for (int d = 2; d <= degree_cap; ++d) {
        // Extend the span by products of total degree d-1.
        for (const Polynomial& t : mc.jacobian_) {
            int td = t.degree();
            if (td < 0 || td > d - 1)
                continue;
            for (const Exps& e : monomials_of_degree(ctx.n(), d - 1 - td))
                red.insert(Polynomial::monomial(ctx.vars, e, Rat(1)) * t);
        }
        std::set<Exps, GrlexLess> basis;
        for (int k = 0; k < d; ++k)
            for (const Exps& e : monomials_of_degree(ctx.n(), k))
                if (!red.rows.count(e))
                    basis.insert(e);
        counts.push_back(static_cast<int>(basis.size()));
        bases.push_back(std::move(basis));
        mc.trajectory_.emplace_back(d, counts.back());

        size_t m = counts.size();
        if (m >= 3 && counts[m - 1] == counts[m - 2] && counts[m - 2] == counts[m - 3] &&
            bases[m - 1] == bases[m - 2] && bases[m - 2] == bases[m - 3]) {
            mc.stabilized_degree_ = d;
            mc.basis_.assign(bases[m - 1].begin(), bases[m - 1].end());
            red.built_degree = d;
            // Generous margin so typical normal-form inputs need no rebuild.
            mc.reducer_ = build_reducer(ctx, mc.jacobian_, d + 8);
            for (const Polynomial& t : mc.jacobian_)
                if (!mc.reducer_.reduce(t).is_zero())
                    fail(Errc::compute, "Jacobian generator does not reduce to zero");
            return mc;
        }
    }
    fail(Errc::compute, "Milnor number did not stabilize up to degree cap " +
                            std::to_string(degree_cap) +
                            " (non-isolated singularity or cap too small)");
}

Polynomial MilnorContext::basis_monomial(int k) const
{
    return Polynomial::monomial(ctx_.vars, basis_.at(k), Rat(1));
}

std::vector<Rat> MilnorContext::normal_form(const Polynomial& p) const
{
    if (!same_vars(p.vars(), ctx_.vars))
        fail(Errc::validation, "normal form ring context mismatch");
    if (smooth_)
        return {};

    Polynomial r;
    if (p.degree() < reducer_.built_degree) {
        r = reducer_.reduce(p);
    } else {
        // Rare: rebuild a reducer wide enough for this input.
        int bound = p.degree() + 1;
        for (int attempt = 0; attempt < 3; ++attempt) {
            Reducer wide = build_reducer(ctx_, jacobian_, bound);
            r = wide.reduce(p);
            bool ok = true;
            for (const auto& [e, c] : r.terms())
                if (!std::binary_search(basis_.begin(), basis_.end(), e, GrlexLess{}))
                    ok = false;
            if (ok)
                break;
            bound += 4;
            if (attempt == 2)
                fail(Errc::compute, "normal form did not land on the Milnor basis");
        }
    }

    std::vector<Rat> coords(basis_.size());
    for (const auto& [e, c] : r.terms()) {
        auto it = std::lower_bound(basis_.begin(), basis_.end(), e, GrlexLess{});
        if (it == basis_.end() || *it != e)
            fail(Errc::compute, "normal form did not land on the Milnor basis");
        coords[it - basis_.begin()] = c;
    }
    return coords;
}

Polynomial MilnorContext::lift(const std::vector<Rat>& coords) const
{
    if (coords.size() != basis_.size())
        fail(Errc::validation, "coordinate length mismatch");
    Polynomial p(ctx_.vars);
    for (size_t k = 0; k < coords.size(); ++k)
        if (!coords[k].is_zero())
            p.add_term(basis_[k], coords[k]);
    return p;
}

} // namespace mfwb
