#include "koszul.hpp"

#include <numeric>
#include <random>

#include "corpus.hpp"
#include "error.hpp"
#include "klpair.hpp"

namespace mfwb {

namespace {

std::string fresh_name(const std::string& base, const std::vector<std::string>& taken)
{
    std::string name = base;
    while (std::find(taken.begin(), taken.end(), name) != taken.end())
        name += "_";
    return name;
}

} // namespace

Polynomial DoubledContext::inject_x(const Polynomial& p) const
{
    std::vector<int> map(n);
    std::iota(map.begin(), map.end(), 0);
    return p.remap(dvars, map);
}

Polynomial DoubledContext::inject_y(const Polynomial& p) const
{
    std::vector<int> map(n);
    for (int i = 0; i < n; ++i)
        map[i] = y_index(i);
    return p.remap(dvars, map);
}

Polynomial DoubledContext::sub_yx(const Polynomial& p, int i) const
{
    return p.merge_var(y_index(i), x_index(i));
}

Polynomial DoubledContext::sub_xy(const Polynomial& p, int i) const
{
    return p.merge_var(x_index(i), y_index(i));
}

Polynomial DoubledContext::sub_all_yx(const Polynomial& p) const
{
    Polynomial r = p;
    for (int i = 0; i < n; ++i)
        r = r.merge_var(y_index(i), x_index(i));
    return r;
}

Polynomial DoubledContext::to_base(const Polynomial& p) const
{
    for (const auto& [e, c] : p.terms())
        for (int i = 0; i < n; ++i)
            if (e[y_index(i)] != 0)
                fail(Errc::compute, "polynomial still involves a diagonal variable");
    std::vector<int> xmap(2 * n, 0);
    for (int i = 0; i < n; ++i)
        xmap[i] = i;
    return p.remap(base.vars, xmap);
}

DoubledPtr make_doubled(const RingContext& base)
{
    auto dc = std::make_shared<DoubledContext>();
    dc->base = base;
    dc->n = base.n();
    if (dc->n > 16)
        fail(Errc::compute, "theta-form machinery supports at most 16 variables");
    std::vector<std::string> names = *base.vars;
    for (const std::string& v : *base.vars)
        names.push_back(fresh_name(v + "_y", names));
    dc->dvars = make_vars(std::move(names));
    dc->wt = dc->inject_y(base.w) - dc->inject_x(base.w);
    for (int i = 0; i < dc->n; ++i)
        dc->delta.push_back(Polynomial::variable(dc->dvars, dc->y_index(i)) -
                            Polynomial::variable(dc->dvars, dc->x_index(i)));
    return dc;
}

std::pair<Polynomial, Polynomial> divide_without_remainder(const DoubledContext& dc,
                                                           const Polynomial& f, int i)
{
    Polynomial f0 = dc.sub_yx(f, i);
    // f = sum_k c_k y_i^k gives f1 = sum_{k>=1} c_k sum_{j<k} y_i^j x_i^{k-1-j}.
    Polynomial f1(dc.dvars);
    int yi = dc.y_index(i), xi = dc.x_index(i);
    for (const auto& [e, c] : f.terms()) {
        int k = e[yi];
        if (k == 0)
            continue;
        Exps d = e;
        for (int j = 0; j < k; ++j) {
            d[yi] = j;
            d[xi] = e[xi] + k - 1 - j;
            f1.add_term(d, c);
        }
    }
    if (f0 + dc.delta[i] * f1 != f)
        fail(Errc::compute, "division without remainder failed reconstruction");
    return {std::move(f0), std::move(f1)};
}

ThetaForm ThetaForm::term(DoubledPtr dc, unsigned mask, Polynomial coeff)
{
    ThetaForm f(std::move(dc));
    f.add_component(mask, coeff);
    return f;
}

Polynomial ThetaForm::component(unsigned mask) const
{
    auto it = comps_.find(mask);
    return it == comps_.end() ? Polynomial(dc_->dvars) : it->second;
}

int ThetaForm::homogeneous_theta_degree() const
{
    int deg = -1;
    for (const auto& [mask, c] : comps_) {
        int k = __builtin_popcount(mask);
        if (deg < 0)
            deg = k;
        else if (deg != k)
            return -1;
    }
    return deg;
}

void ThetaForm::add_component(unsigned mask, const Polynomial& coeff)
{
    if (coeff.is_zero())
        return;
    auto [it, inserted] = comps_.emplace(mask, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            comps_.erase(it);
    }
}

ThetaForm ThetaForm::operator-() const
{
    ThetaForm r(dc_);
    for (const auto& [m, c] : comps_)
        r.comps_.emplace(m, -c);
    return r;
}

ThetaForm operator+(ThetaForm a, const ThetaForm& b)
{
    for (const auto& [m, c] : b.comps_)
        a.add_component(m, c);
    return a;
}

ThetaForm operator-(ThetaForm a, const ThetaForm& b)
{
    for (const auto& [m, c] : b.comps_)
        a.add_component(m, -c);
    return a;
}

ThetaForm ThetaForm::scaled(const Rat& c) const
{
    ThetaForm r(dc_);
    if (c.is_zero())
        return r;
    for (const auto& [m, p] : comps_)
        r.comps_.emplace(m, p.scaled(c));
    return r;
}

ThetaForm ThetaForm::scaled_poly(const Polynomial& p) const
{
    ThetaForm r(dc_);
    for (const auto& [m, q] : comps_)
        r.add_component(m, q * p);
    return r;
}

ThetaForm koszul_h(const ThetaForm& w, int i)
{
    const auto& dc = *w.dc();
    ThetaForm r(w.dc());
    for (const auto& [mask, f] : w.components()) {
        if (mask & (1u << i))
            continue;
        Polynomial f1 = divide_without_remainder(dc, f, i).second;
        if (theta_sign(mask, i) < 0)
            f1 = -f1;
        r.add_component(mask | (1u << i), f1);
    }
    return r;
}

ThetaForm koszul_pr(const ThetaForm& w, int i)
{
    const auto& dc = *w.dc();
    ThetaForm r(w.dc());
    for (const auto& [mask, f] : w.components()) {
        if (mask & (1u << i))
            continue;
        r.add_component(mask, dc.sub_yx(f, i));
    }
    return r;
}

ThetaForm wedge_theta(const ThetaForm& w, int i)
{
    ThetaForm r(w.dc());
    for (const auto& [mask, f] : w.components()) {
        if (mask & (1u << i))
            continue;
        r.add_component(mask | (1u << i), theta_sign(mask, i) < 0 ? -f : f);
    }
    return r;
}

ThetaForm iota_delta(const ThetaForm& w)
{
    const auto& dc = *w.dc();
    ThetaForm r(w.dc());
    for (const auto& [mask, f] : w.components()) {
        for (int i = 0; i < dc.n; ++i) {
            if (!(mask & (1u << i)))
                continue;
            Polynomial c = dc.delta[i] * f;
            if (theta_sign(mask, i) < 0)
                c = -c;
            r.add_component(mask & ~(1u << i), c);
        }
    }
    return r;
}

ThetaForm eps_lambda(const ThetaForm& w, const std::vector<Polynomial>& w_coeffs)
{
    const auto& dc = *w.dc();
    ThetaForm r(w.dc());
    for (const auto& [mask, f] : w.components()) {
        for (int i = 0; i < dc.n; ++i) {
            if (mask & (1u << i))
                continue;
            Polynomial c = w_coeffs[i] * f;
            if (theta_sign(mask, i) < 0)
                c = -c;
            r.add_component(mask | (1u << i), c);
        }
    }
    return r;
}

namespace {

Rat projection_weight(int n, int l)
{
    // a(l) = 1/((n-l) binom(n,l))
    return (Rat(n - l) * binomial(n, l)).inverse();
}

} // namespace

ThetaForm big_P(const ThetaForm& w)
{
    int n = w.dc()->n;
    ThetaForm acc(w.dc());
    unsigned full = (1u << n) - 1u;
    for (unsigned sub = 0; sub <= full; ++sub) {
        int l = __builtin_popcount(sub);
        if (l >= n)
            continue;
        ThetaForm proj = w;
        for (int i = 0; i < n; ++i)
            if (sub & (1u << i))
                proj = koszul_pr(proj, i);
        acc = acc + proj.scaled(projection_weight(n, l));
    }
    return acc;
}

namespace {

ThetaForm big_h_rec(const ThetaForm& w, unsigned active)
{
    int m = __builtin_popcount(active);
    ThetaForm acc(w.dc());
    for (int i = 0; i < w.dc()->n; ++i)
        if (active & (1u << i))
            acc = acc + koszul_h(w, i);
    if (m > 1) {
        for (int i = 0; i < w.dc()->n; ++i)
            if (active & (1u << i))
                acc = acc + big_h_rec(koszul_pr(w, i), active & ~(1u << i));
    }
    return acc.scaled(Rat(1, m));
}

} // namespace

ThetaForm big_H(const ThetaForm& w)
{
    unsigned full = (1u << w.dc()->n) - 1u;
    return big_h_rec(w, full);
}

ThetaForm big_H_explicit(const ThetaForm& w)
{
    ThetaForm p = big_P(w);
    ThetaForm acc(w.dc());
    for (int i = 0; i < w.dc()->n; ++i)
        acc = acc + koszul_h(p, i);
    return acc;
}

DeltaStab delta_stab(const DoubledPtr& dc)
{
    DeltaStab ds;
    ds.dc = dc;
    ds.lambda = big_H(ThetaForm::term(dc, 0u, dc->wt));
    ds.w_coeffs.assign(dc->n, Polynomial(dc->dvars));
    for (const auto& [mask, c] : ds.lambda.components()) {
        if (__builtin_popcount(mask) != 1)
            fail(Errc::compute, "lambda = H(w~) is not a 1-form");
        int i = __builtin_ctz(mask);
        ds.w_coeffs[i] = c;
    }
    // sum_i w_i Delta_i = w~ exactly.
    Polynomial check(dc->dvars);
    for (int i = 0; i < dc->n; ++i)
        check += ds.w_coeffs[i] * dc->delta[i];
    if (check != dc->wt)
        fail(Errc::compute, "stabilized diagonal coefficients do not decompose w~");
    // Twisted differential squares to w~ on a spanning set of forms.
    unsigned full = (1u << dc->n) - 1u;
    for (unsigned mask = 0; mask <= full; ++mask) {
        ThetaForm v = ThetaForm::term(dc, mask, Polynomial::constant(dc->dvars, Rat(1)));
        ThetaForm sq = twisted_differential(ds, twisted_differential(ds, v));
        if (sq != v.scaled_poly(dc->wt))
            fail(Errc::compute, "twisted differential does not square to w~");
    }
    return ds;
}

ThetaForm twisted_differential(const DeltaStab& ds, const ThetaForm& w)
{
    return iota_delta(w) + eps_lambda(w, ds.w_coeffs);
}

MatThetaForm MatThetaForm::term(DoubledPtr dc, unsigned mask, SuperMatrix m)
{
    MatThetaForm f(std::move(dc), m.row_rank_even());
    f.add_component(mask, m);
    return f;
}

SuperMatrix MatThetaForm::component(unsigned mask) const
{
    auto it = comps_.find(mask);
    if (it != comps_.end())
        return it->second;
    return SuperMatrix(dc_->dvars, r_, r_, r_, r_, Parity::Mixed);
}

void MatThetaForm::add_component(unsigned mask, const SuperMatrix& m)
{
    if (m.is_zero())
        return;
    auto it = comps_.find(mask);
    if (it == comps_.end()) {
        comps_.emplace(mask, m);
    } else {
        it->second = it->second + m;
        if (it->second.is_zero())
            comps_.erase(it);
    }
}

MatThetaForm MatThetaForm::operator-() const
{
    MatThetaForm r(dc_, r_);
    for (const auto& [m, c] : comps_)
        r.comps_.emplace(m, -c);
    return r;
}

MatThetaForm operator+(MatThetaForm a, const MatThetaForm& b)
{
    for (const auto& [m, c] : b.comps_)
        a.add_component(m, c);
    return a;
}

MatThetaForm operator-(MatThetaForm a, const MatThetaForm& b)
{
    for (const auto& [m, c] : b.comps_)
        a.add_component(m, -c);
    return a;
}

MatThetaForm MatThetaForm::scaled(const Rat& c) const
{
    MatThetaForm r(dc_, r_);
    if (c.is_zero())
        return r;
    for (const auto& [m, p] : comps_)
        r.comps_.emplace(m, p.scaled(c));
    return r;
}

namespace {

// Applies an entrywise coefficient operation carrying the Koszul sign of an
// odd operator: extra (-1) on odd matrix entries.
SuperMatrix odd_op_entrywise(const SuperMatrix& m,
                             const std::function<Polynomial(const Polynomial&)>& f)
{
    SuperMatrix r = m;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            Polynomial v = f(m.at(i, j));
            r.at(i, j) = m.entry_is_odd(i, j) ? -v : v;
        }
    return r;
}

SuperMatrix even_op_entrywise(const SuperMatrix& m,
                              const std::function<Polynomial(const Polynomial&)>& f)
{
    SuperMatrix r = m;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            r.at(i, j) = f(m.at(i, j));
    return r;
}

} // namespace

MatThetaForm mat_h(const MatThetaForm& v, int i)
{
    const auto& dc = *v.dc();
    MatThetaForm r(v.dc(), v.rank());
    for (const auto& [mask, m] : v.components()) {
        if (mask & (1u << i))
            continue;
        SuperMatrix divided = odd_op_entrywise(m, [&](const Polynomial& p) {
            return divide_without_remainder(dc, p, i).second;
        });
        if (theta_sign(mask, i) < 0)
            divided = -divided;
        r.add_component(mask | (1u << i), divided);
    }
    return r;
}

MatThetaForm mat_pr(const MatThetaForm& v, int i)
{
    const auto& dc = *v.dc();
    MatThetaForm r(v.dc(), v.rank());
    for (const auto& [mask, m] : v.components()) {
        if (mask & (1u << i))
            continue;
        r.add_component(mask, even_op_entrywise(m, [&](const Polynomial& p) {
                            return dc.sub_yx(p, i);
                        }));
    }
    return r;
}

MatThetaForm mat_big_P(const MatThetaForm& v)
{
    int n = v.dc()->n;
    MatThetaForm acc(v.dc(), v.rank());
    unsigned full = (1u << n) - 1u;
    for (unsigned sub = 0; sub <= full; ++sub) {
        int l = __builtin_popcount(sub);
        if (l >= n)
            continue;
        MatThetaForm proj = v;
        for (int i = 0; i < n; ++i)
            if (sub & (1u << i))
                proj = mat_pr(proj, i);
        acc = acc + proj.scaled(projection_weight(n, l));
    }
    return acc;
}

namespace {

MatThetaForm mat_big_h_rec(const MatThetaForm& v, unsigned active)
{
    int m = __builtin_popcount(active);
    MatThetaForm acc(v.dc(), v.rank());
    for (int i = 0; i < v.dc()->n; ++i)
        if (active & (1u << i))
            acc = acc + mat_h(v, i);
    if (m > 1) {
        for (int i = 0; i < v.dc()->n; ++i)
            if (active & (1u << i))
                acc = acc + mat_big_h_rec(mat_pr(v, i), active & ~(1u << i));
    }
    return acc.scaled(Rat(1, m));
}

} // namespace

MatThetaForm mat_big_H(const MatThetaForm& v)
{
    unsigned full = (1u << v.dc()->n) - 1u;
    return mat_big_h_rec(v, full);
}

MatThetaForm mat_iota_delta(const MatThetaForm& v)
{
    const auto& dc = *v.dc();
    MatThetaForm r(v.dc(), v.rank());
    for (const auto& [mask, m] : v.components()) {
        // (-1)^{|M|} from passing the matrix, theta sign from the contraction.
        SuperMatrix flipped = m.parity_flip();
        for (int i = 0; i < dc.n; ++i) {
            if (!(mask & (1u << i)))
                continue;
            SuperMatrix c = flipped.scaled_poly(dc.delta[i]);
            if (theta_sign(mask, i) < 0)
                c = -c;
            r.add_component(mask & ~(1u << i), c);
        }
    }
    return r;
}

MatThetaForm mat_eps_lambda(const MatThetaForm& v, const DeltaStab& ds)
{
    const auto& dc = *v.dc();
    MatThetaForm r(v.dc(), v.rank());
    for (const auto& [mask, m] : v.components()) {
        SuperMatrix flipped = m.parity_flip();
        for (int i = 0; i < dc.n; ++i) {
            if (mask & (1u << i))
                continue;
            SuperMatrix c = flipped.scaled_poly(ds.w_coeffs[i]);
            if (theta_sign(mask, i) < 0)
                c = -c;
            r.add_component(mask | (1u << i), c);
        }
    }
    return r;
}

MatThetaForm mat_dq(const MatThetaForm& v, const SuperMatrix& qx, const SuperMatrix& qy)
{
    MatThetaForm r(v.dc(), v.rank());
    for (const auto& [mask, m] : v.components())
        r.add_component(mask, qx * m - m.parity_flip() * qy);
    return r;
}

EtaReport eta_check(const MatrixFactorization& e, bool use_naive_wedge)
{
    DoubledPtr dc = make_doubled(e.ctx);
    DeltaStab ds = delta_stab(dc);
    int n = dc->n;
    int r = e.rank;

    SuperMatrix q = e.Q();
    auto lift_mat = [&](const SuperMatrix& m, bool to_y) {
        SuperMatrix out(dc->dvars, r, r, r, r, m.parity());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                out.at(i, j) = to_y ? dc->inject_y(m.at(i, j)) : dc->inject_x(m.at(i, j));
        return out;
    };
    SuperMatrix qx = lift_mat(q, false);
    SuperMatrix qy = lift_mat(q, true);

    auto delta_op = [&](const MatThetaForm& v) {
        return mat_dq(v, qx, qy) + mat_eps_lambda(v, ds);
    };

    MatThetaForm cur =
        MatThetaForm::term(dc, 0u, SuperMatrix::identity(dc->dvars, r, r));
    MatThetaForm acc = cur;
    for (int k = 1; k <= n; ++k) {
        cur = -mat_big_H(delta_op(cur));
        acc = acc + cur;
    }

    unsigned full = (1u << n) - 1u;
    SuperMatrix top = acc.component(full);

    SuperMatrix wedge = use_naive_wedge ? dq_wedge_naive(e) : dq_wedge(e);
    SuperMatrix reference = lift_mat(wedge.scaled(kl_sign(n) / factorial(n)), false);

    // Reduce the difference modulo (Delta_1, ..., Delta_n) entry by entry via
    // iterated division without remainder.
    SuperMatrix diff = top - reference;
    bool pass = true;
    PolyMat reduced(e.ctx.vars, 2 * r, 2 * r);
    for (int i = 0; i < diff.rows(); ++i)
        for (int j = 0; j < diff.cols(); ++j) {
            Polynomial rem = diff.at(i, j);
            for (int k = 0; k < n; ++k)
                rem = divide_without_remainder(*dc, rem, k).first;
            if (!rem.is_zero())
                pass = false;
        }

    EtaReport rep;
    rep.pass = pass;
    rep.eta = acc;
    rep.reference = PolyMat(e.ctx.vars, 2 * r, 2 * r);
    rep.eta_top_reduced = PolyMat(e.ctx.vars, 2 * r, 2 * r);
    SuperMatrix base_ref = wedge.scaled(kl_sign(n) / factorial(n));
    for (int i = 0; i < 2 * r; ++i)
        for (int j = 0; j < 2 * r; ++j) {
            rep.reference.at(i, j) = base_ref.at(i, j);
            Polynomial red = top.at(i, j);
            for (int k = 0; k < n; ++k)
                red = divide_without_remainder(*dc, red, k).first;
            rep.eta_top_reduced.at(i, j) = dc->to_base(red);
        }
    return rep;
}

DeltaStabRetract make_delta_stab_retract(const MatrixFactorization& e, int trunc_degree)
{
    DeltaStabRetract out;
    out.dc = make_doubled(e.ctx);
    out.ds = delta_stab(out.dc);
    const DoubledPtr& dc = out.dc;
    int n = dc->n;
    int r = e.rank;

    SuperMatrix q = e.Q();
    auto lift_mat = [&](const SuperMatrix& m, bool to_y) {
        SuperMatrix lifted(dc->dvars, r, r, r, r, m.parity());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                lifted.at(i, j) = to_y ? dc->inject_y(m.at(i, j)) : dc->inject_x(m.at(i, j));
        return lifted;
    };
    out.qx = lift_mat(q, false);
    out.qy = lift_mat(q, true);

    RetractOps<MatThetaForm> ops;
    ops.dA = [dc, r](const MatThetaForm&) { return MatThetaForm(dc, r); };
    ops.dB = [](const MatThetaForm& v) { return mat_iota_delta(v); };
    ops.iota = [](const MatThetaForm& v) { return v; };
    ops.proj = [dc, r](const MatThetaForm& v) {
        SuperMatrix c = v.component(0u);
        SuperMatrix reduced(dc->dvars, r, r, r, r, Parity::Mixed);
        for (int i = 0; i < c.rows(); ++i)
            for (int j = 0; j < c.cols(); ++j)
                reduced.at(i, j) = dc->sub_all_yx(c.at(i, j));
        return MatThetaForm::term(dc, 0u, std::move(reduced));
    };
    ops.h = [](const MatThetaForm& v) { return -mat_big_H(v); };

    auto unit_forms = [&](bool x_only, unsigned max_mask) {
        std::vector<MatThetaForm> basis;
        std::vector<Exps> monos =
            monomials_below_degree(x_only ? n : 2 * n, trunc_degree + 1);
        for (unsigned mask = 0; mask <= max_mask; ++mask) {
            for (const Exps& e0 : monos) {
                Exps lifted(2 * n, 0);
                for (int i = 0; i < static_cast<int>(e0.size()); ++i)
                    lifted[i] = e0[i];
                for (int a = 0; a < 2 * r; ++a)
                    for (int b = 0; b < 2 * r; ++b) {
                        SuperMatrix m(dc->dvars, r, r, r, r, Parity::Mixed);
                        m.at(a, b) = Polynomial::monomial(dc->dvars, lifted, Rat(1));
                        basis.push_back(MatThetaForm::term(dc, mask, std::move(m)));
                    }
            }
        }
        return basis;
    };

    // Total parity of a homogeneous form: theta count plus matrix parity.
    auto total_parity = [](const MatThetaForm& v) -> std::optional<int> {
        std::optional<int> par;
        for (const auto& [mask, m] : v.components())
            for (int a = 0; a < m.rows(); ++a)
                for (int b = 0; b < m.cols(); ++b) {
                    if (m.at(a, b).is_zero())
                        continue;
                    int p = (__builtin_popcount(mask) + (m.entry_is_odd(a, b) ? 1 : 0)) % 2;
                    if (!par)
                        par = p;
                    else if (*par != p)
                        return std::nullopt;
                }
        return par;
    };

    unsigned full = (1u << n) - 1u;
    std::vector<MatThetaForm> basisA = unit_forms(true, 0u);
    std::vector<MatThetaForm> basisB = unit_forms(false, full);
    out.datum = make_retract_datum(
        std::move(ops), std::move(basisA), std::move(basisB),
        "stabilized diagonal retract",
        std::function<std::optional<int>(const MatThetaForm&)>(total_parity));

    SuperMatrix qx = out.qx, qy = out.qy;
    DeltaStab ds = out.ds;
    out.delta = [qx, qy, ds](const MatThetaForm& v) {
        return mat_dq(v, qx, qy) + mat_eps_lambda(v, ds);
    };
    return out;
}

KoszulSuiteResult koszul_property_suite(const RingContext& ctx, int forms, unsigned seed)
{
    KoszulSuiteResult res;
    DoubledPtr dc = make_doubled(ctx);
    int n = dc->n;
    res.n = n;
    res.forms = forms;
    unsigned full = (1u << n) - 1u;

    corpus::Rng rng(seed);
    std::uniform_int_distribution<unsigned> mask_dist(0u, full);
    auto random_form = [&](int comps) {
        ThetaForm f(dc);
        for (int t = 0; t < comps; ++t)
            f.add_component(mask_dist(rng), corpus::random_poly(rng, dc->dvars, 3, 3));
        return f;
    };
    auto mod_delta_zero = [&](const ThetaForm& f) {
        for (const auto& [mask, p] : f.components())
            if (!dc->sub_all_yx(p).is_zero())
                return false;
        return true;
    };

    for (int trial = 0; trial < forms; ++trial) {
        ThetaForm w = random_form(2);

        for (int i = 0; i < n && res.anticommute; ++i)
            for (int j = i; j < n; ++j)
                if (!(koszul_h(koszul_h(w, j), i) + koszul_h(koszul_h(w, i), j)).is_zero()) {
                    res.anticommute = false;
                    break;
                }

        for (int i = 0; i < n && res.taylor; ++i) {
            ThetaForm wy(dc), wx(dc);
            for (const auto& [mask, p] : w.components()) {
                wy.add_component(mask, dc->sub_xy(p, i));
                wx.add_component(mask, dc->sub_yx(p, i).derivative(dc->x_index(i)));
            }
            ThetaForm diff = koszul_h(wy, i) - wedge_theta(wx, i);
            for (const auto& [mask, p] : diff.components())
                if (!dc->sub_yx(p, i).is_zero()) {
                    res.taylor = false;
                    break;
                }
        }

        for (int i = 0; i < n && res.commute_with_p; ++i)
            if (!(koszul_h(big_P(w), i) == big_P(koszul_h(w, i))))
                res.commute_with_p = false;

        ThetaForm pos = random_form(1);
        int deg = pos.homogeneous_theta_degree();
        if (deg > 0 && res.contraction) {
            if (!(iota_delta(big_H(pos)) + big_H(iota_delta(pos)) == pos))
                res.contraction = false;
        }
        ThetaForm f0 = ThetaForm::term(dc, 0u, corpus::random_poly(rng, dc->dvars, 3, 3));
        ThetaForm aug(dc);
        aug.add_component(0u, dc->sub_all_yx(f0.component(0u)));
        if (res.contraction && !(iota_delta(big_H(f0)) + aug == f0))
            res.contraction = false;

        if (res.recursion_matches_explicit && !(big_H(w) == big_H_explicit(w)))
            res.recursion_matches_explicit = false;

        for (int i = 0; i < n && res.pr_chain_map; ++i)
            if (!(iota_delta(koszul_pr(w, i)) == koszul_pr(iota_delta(w), i)))
                res.pr_chain_map = false;
    }

    for (int k = 1; k <= n && res.projection; ++k) {
        for (int trial = 0; trial < std::max(1, forms / 10); ++trial) {
            ThetaForm w(dc);
            for (unsigned mask = 0; mask <= full; ++mask)
                if (__builtin_popcount(mask) == k)
                    w.add_component(mask, corpus::random_poly(rng, dc->dvars, 3, 2));
            if (!mod_delta_zero(big_P(w) - w.scaled(Rat(1, k)))) {
                res.projection = false;
                break;
            }
        }
    }

    try {
        delta_stab(dc);
    } catch (const Error&) {
        res.delta_stab_ok = false;
    }
    return res;
}

} // namespace mfwb
