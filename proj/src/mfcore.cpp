#include "mfcore.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "error.hpp"

namespace mfwb {

SuperMatrix MatrixFactorization::Q() const
{
    SuperMatrix q(ctx.vars, rank, rank, rank, rank, Parity::Odd);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            q.at(i, rank + j) = phi.at(i, j);
            q.at(rank + i, j) = psi.at(i, j);
        }
    return q;
}

MatrixFactorization validate_mf(const RingContext& ctx, PolyMat phi, PolyMat psi,
                                const std::string& name)
{
    std::string label = name.empty() ? std::string() : "'" + name + "': ";
    if (phi.rows() != phi.cols() || psi.rows() != psi.cols())
        fail(Errc::validation, label + "factorization matrices must be square");
    if (phi.rows() != psi.rows())
        fail(Errc::validation, label + "phi and psi must have equal size");
    if (!same_vars(phi.vars(), ctx.vars) || !same_vars(psi.vars(), ctx.vars))
        fail(Errc::validation, label + "factorization ring context mismatch");
    int r = phi.rows();
    if (r == 0)
        fail(Errc::validation, label + "factorization must have positive rank");

    auto check = [&](const PolyMat& prod, const char* which) {
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                Polynomial expect =
                    i == j ? ctx.w : Polynomial::zero(ctx.vars);
                if (prod.at(i, j) != expect)
                    fail(Errc::validation,
                         label + std::string(which) + " entry (" + std::to_string(i) + "," +
                             std::to_string(j) + ") is " + prod.at(i, j).to_string() +
                             ", expected " + expect.to_string());
            }
    };
    check(phi * psi, "phi*psi");
    check(psi * phi, "psi*phi");
    return MatrixFactorization{ctx, std::move(phi), std::move(psi), r};
}

Morphism make_morphism(MatrixFactorization source, MatrixFactorization target,
                       SuperMatrix mat)
{
    if (!same_vars(source.ctx.vars, target.ctx.vars) || source.ctx.w != target.ctx.w)
        fail(Errc::validation, "morphism endpoints live over different rings");
    if (mat.row_rank_even() != target.rank || mat.row_rank_odd() != target.rank ||
        mat.col_rank_even() != source.rank || mat.col_rank_odd() != source.rank)
        fail(Errc::validation, "morphism matrix shape does not match target x source");
    if (!same_vars(mat.vars(), source.ctx.vars))
        fail(Errc::validation, "morphism ring context mismatch");
    return Morphism{std::move(source), std::move(target), std::move(mat)};
}

Morphism identity_morphism(const MatrixFactorization& e)
{
    return make_morphism(e, e, SuperMatrix::identity(e.ctx.vars, e.rank, e.rank));
}

Morphism zero_morphism(const MatrixFactorization& source, const MatrixFactorization& target,
                       Parity parity)
{
    SuperMatrix z(source.ctx.vars, target.rank, target.rank, source.rank, source.rank, parity);
    return make_morphism(source, target, std::move(z));
}

Morphism hom_differential(const Morphism& f)
{
    if (!f.mat.is_homogeneous())
        fail(Errc::validation, "hom differential requires a homogeneous morphism");
    SuperMatrix qt = f.target.Q();
    SuperMatrix qs = f.source.Q();
    SuperMatrix d = f.parity() == Parity::Even ? qt * f.mat - f.mat * qs
                                               : qt * f.mat + f.mat * qs;
    return Morphism{f.source, f.target, std::move(d)};
}

bool is_closed(const Morphism& f)
{
    return hom_differential(f).mat.is_zero();
}

Morphism operator+(const Morphism& a, const Morphism& b)
{
    if (!(a.source == b.source) || !(a.target == b.target))
        fail(Errc::validation, "morphism endpoint mismatch");
    return Morphism{a.source, a.target, a.mat + b.mat};
}

Morphism operator-(const Morphism& a, const Morphism& b)
{
    if (!(a.source == b.source) || !(a.target == b.target))
        fail(Errc::validation, "morphism endpoint mismatch");
    return Morphism{a.source, a.target, a.mat - b.mat};
}

Morphism compose(const Morphism& f, const Morphism& g)
{
    if (!(f.source == g.target))
        fail(Errc::validation, "morphisms not composable");
    return Morphism{g.source, f.target, f.mat * g.mat};
}

Morphism scale(const Morphism& f, const Rat& c)
{
    return Morphism{f.source, f.target, f.mat.scaled(c)};
}

Morphism scale_poly(const Morphism& f, const Polynomial& p)
{
    return Morphism{f.source, f.target, f.mat.scaled_poly(p)};
}

namespace {

int popcount_below(unsigned mask, int i)
{
    return __builtin_popcount(mask & ((1u << i) - 1u));
}

} // namespace

SuperMatrix dq_wedge(const MatrixFactorization& x)
{
    int n = x.ctx.n();
    SuperMatrix q = x.Q();
    std::vector<SuperMatrix> dq;
    dq.reserve(n);
    for (int i = 0; i < n; ++i)
        dq.push_back(q.derivative(i));

    // wedge over an index subset, recursing on which index comes first:
    //   W(S) = sum_{i in S} (-1)^{pos_S(i)} dQ_i * W(S \ {i}).
    std::map<unsigned, SuperMatrix> memo;
    auto wedge = [&](auto&& self, unsigned mask) -> const SuperMatrix& {
        auto it = memo.find(mask);
        if (it != memo.end())
            return it->second;
        SuperMatrix acc;
        if (mask == 0) {
            acc = SuperMatrix::identity(x.ctx.vars, x.rank, x.rank);
        } else {
            bool started = false;
            for (int i = 0; i < n; ++i) {
                if (!(mask & (1u << i)))
                    continue;
                SuperMatrix term = dq[i] * self(self, mask & ~(1u << i));
                if (popcount_below(mask, i) % 2 == 1)
                    term = -term;
                if (!started) {
                    acc = std::move(term);
                    started = true;
                } else {
                    acc = acc + term;
                }
            }
        }
        return memo.emplace(mask, std::move(acc)).first->second;
    };
    return wedge(wedge, (1u << n) - 1u);
}

SuperMatrix dq_wedge_naive(const MatrixFactorization& x)
{
    int n = x.ctx.n();
    SuperMatrix q = x.Q();
    std::vector<SuperMatrix> dq;
    dq.reserve(n);
    for (int i = 0; i < n; ++i)
        dq.push_back(q.derivative(i));

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    SuperMatrix acc(x.ctx.vars, x.rank, x.rank, x.rank, x.rank,
                    n % 2 == 0 ? Parity::Even : Parity::Odd);
    do {
        int sign = 1;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j])
                    sign = -sign;
        SuperMatrix prod = dq[perm[0]];
        for (int i = 1; i < n; ++i)
            prod = prod * dq[perm[i]];
        acc = sign > 0 ? acc + prod : acc - prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

MatrixFactorization direct_sum(const MatrixFactorization& a, const MatrixFactorization& b)
{
    if (!same_vars(a.ctx.vars, b.ctx.vars) || a.ctx.w != b.ctx.w)
        fail(Errc::validation, "direct sum over different rings");
    int r = a.rank + b.rank;
    PolyMat phi(a.ctx.vars, r, r), psi(a.ctx.vars, r, r);
    for (int i = 0; i < a.rank; ++i)
        for (int j = 0; j < a.rank; ++j) {
            phi.at(i, j) = a.phi.at(i, j);
            psi.at(i, j) = a.psi.at(i, j);
        }
    for (int i = 0; i < b.rank; ++i)
        for (int j = 0; j < b.rank; ++j) {
            phi.at(a.rank + i, a.rank + j) = b.phi.at(i, j);
            psi.at(a.rank + i, a.rank + j) = b.psi.at(i, j);
        }
    return validate_mf(a.ctx, std::move(phi), std::move(psi));
}

MatrixFactorization shift(const MatrixFactorization& x)
{
    return validate_mf(x.ctx, -x.psi, -x.phi);
}

} // namespace mfwb
