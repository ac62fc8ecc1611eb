#include "superlin.hpp"

#include <functional>

#include "error.hpp"

namespace mfwb {

PolyMat::PolyMat(VarsPtr vars, int rows, int cols)
    : vars_(std::move(vars)), rows_(rows), cols_(cols)
{
    e_.assign(static_cast<size_t>(rows) * cols, Polynomial(vars_));
}

PolyMat PolyMat::identity(const VarsPtr& vars, int n)
{
    PolyMat m(vars, n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = Polynomial::constant(vars, Rat(1));
    return m;
}

bool PolyMat::is_zero() const
{
    for (const auto& p : e_)
        if (!p.is_zero())
            return false;
    return true;
}

PolyMat PolyMat::operator-() const
{
    PolyMat r = *this;
    for (auto& p : r.e_)
        p = -p;
    return r;
}

PolyMat& PolyMat::operator+=(const PolyMat& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        fail(Errc::validation, "matrix shape mismatch");
    for (size_t i = 0; i < e_.size(); ++i)
        e_[i] += o.e_[i];
    return *this;
}

PolyMat& PolyMat::operator-=(const PolyMat& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        fail(Errc::validation, "matrix shape mismatch");
    for (size_t i = 0; i < e_.size(); ++i)
        e_[i] -= o.e_[i];
    return *this;
}

PolyMat operator*(const PolyMat& a, const PolyMat& b)
{
    if (a.cols_ != b.rows_)
        fail(Errc::validation, "matrix shape mismatch");
    if (!same_vars(a.vars_, b.vars_))
        fail(Errc::validation, "matrix ring context mismatch");
    PolyMat r(a.vars_, a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Polynomial& p = a.at(i, k);
            if (p.is_zero())
                continue;
            for (int j = 0; j < b.cols_; ++j) {
                if (b.at(k, j).is_zero())
                    continue;
                r.at(i, j) += p * b.at(k, j);
            }
        }
    return r;
}

PolyMat PolyMat::scaled(const Rat& c) const
{
    PolyMat r = *this;
    for (auto& p : r.e_)
        p = p.scaled(c);
    return r;
}

PolyMat PolyMat::scaled_poly(const Polynomial& p) const
{
    PolyMat r = *this;
    for (auto& q : r.e_)
        q = q * p;
    return r;
}

PolyMat PolyMat::derivative(int var) const
{
    PolyMat r = *this;
    for (auto& p : r.e_)
        p = p.derivative(var);
    return r;
}

PolyMat PolyMat::map_entries(const std::function<Polynomial(const Polynomial&)>& f) const
{
    PolyMat r = *this;
    for (auto& p : r.e_)
        p = f(p);
    if (!r.e_.empty())
        r.vars_ = r.e_.front().vars();
    return r;
}

bool operator==(const PolyMat& a, const PolyMat& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

int PolyMat::max_entry_degree() const
{
    int d = 0;
    for (const auto& p : e_)
        d = std::max(d, p.degree());
    return d;
}

SuperMatrix::SuperMatrix(VarsPtr vars, int p0, int p1, int q0, int q1, Parity parity)
    : entries_(std::move(vars), p0 + p1, q0 + q1), p0_(p0), p1_(p1), q0_(q0), q1_(q1),
      parity_(parity)
{
}

SuperMatrix SuperMatrix::from_entries(PolyMat entries, int p0, int p1, int q0, int q1,
                                      Parity parity)
{
    if (entries.rows() != p0 + p1 || entries.cols() != q0 + q1)
        fail(Errc::validation, "supermatrix rank/shape mismatch");
    SuperMatrix m;
    m.entries_ = std::move(entries);
    m.p0_ = p0;
    m.p1_ = p1;
    m.q0_ = q0;
    m.q1_ = q1;
    m.parity_ = parity;
    if (parity != Parity::Mixed) {
        bool want_odd = parity == Parity::Odd;
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c)
                if (m.entry_is_odd(r, c) != want_odd && !m.at(r, c).is_zero())
                    fail(Errc::validation,
                         std::string("supermatrix declared ") + parity_name(parity) +
                             " but entry (" + std::to_string(r) + "," + std::to_string(c) +
                             ") violates the block pattern");
    }
    return m;
}

SuperMatrix SuperMatrix::identity(const VarsPtr& vars, int r0, int r1)
{
    SuperMatrix m(vars, r0, r1, r0, r1, Parity::Even);
    for (int i = 0; i < r0 + r1; ++i)
        m.at(i, i) = Polynomial::constant(vars, Rat(1));
    return m;
}

void SuperMatrix::classify()
{
    bool has_even = false, has_odd = false;
    for (int r = 0; r < rows(); ++r)
        for (int c = 0; c < cols(); ++c) {
            if (at(r, c).is_zero())
                continue;
            (entry_is_odd(r, c) ? has_odd : has_even) = true;
        }
    if (has_even && has_odd)
        parity_ = Parity::Mixed;
    else if (has_odd)
        parity_ = Parity::Odd;
    else
        parity_ = Parity::Even;
}

SuperMatrix SuperMatrix::operator-() const
{
    SuperMatrix r = *this;
    r.entries_ = -r.entries_;
    return r;
}

SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b)
{
    if (a.p0_ != b.p0_ || a.p1_ != b.p1_ || a.q0_ != b.q0_ || a.q1_ != b.q1_)
        fail(Errc::validation, "supermatrix rank mismatch");
    SuperMatrix r = a;
    r.entries_ += b.entries_;
    if (a.parity_ != b.parity_)
        r.classify();
    return r;
}

SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b)
{
    return a + (-b);
}

SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b)
{
    if (a.q0_ != b.p0_ || a.q1_ != b.p1_)
        fail(Errc::validation, "supermatrix rank mismatch");
    SuperMatrix r;
    r.entries_ = a.entries_ * b.entries_;
    r.p0_ = a.p0_;
    r.p1_ = a.p1_;
    r.q0_ = b.q0_;
    r.q1_ = b.q1_;
    if (a.parity_ == Parity::Mixed || b.parity_ == Parity::Mixed)
        r.classify();
    else
        r.parity_ = parity_mul(a.parity_, b.parity_);
    return r;
}

SuperMatrix SuperMatrix::scaled(const Rat& c) const
{
    SuperMatrix r = *this;
    r.entries_ = r.entries_.scaled(c);
    return r;
}

SuperMatrix SuperMatrix::scaled_poly(const Polynomial& p) const
{
    SuperMatrix r = *this;
    r.entries_ = r.entries_.scaled_poly(p);
    return r;
}

SuperMatrix SuperMatrix::derivative(int var) const
{
    SuperMatrix r = *this;
    r.entries_ = r.entries_.derivative(var);
    return r;
}

SuperMatrix SuperMatrix::parity_flip() const
{
    SuperMatrix r = *this;
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j)
            if (r.entry_is_odd(i, j))
                r.at(i, j) = -r.at(i, j);
    return r;
}

SuperMatrix SuperMatrix::homogeneous_part(Parity p) const
{
    if (p == Parity::Mixed)
        fail(Errc::validation, "homogeneous part must be even or odd");
    SuperMatrix r(entries_.vars(), p0_, p1_, q0_, q1_, p);
    bool want_odd = p == Parity::Odd;
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j)
            if (entry_is_odd(i, j) == want_odd)
                r.at(i, j) = at(i, j);
    return r;
}

bool operator==(const SuperMatrix& a, const SuperMatrix& b)
{
    return a.p0_ == b.p0_ && a.p1_ == b.p1_ && a.q0_ == b.q0_ && a.q1_ == b.q1_ &&
           a.entries_ == b.entries_;
}

Polynomial supertrace(const SuperMatrix& m)
{
    if (m.row_rank_even() != m.col_rank_even() || m.row_rank_odd() != m.col_rank_odd())
        fail(Errc::validation, "supertrace of non-square supermatrix");
    Polynomial t(m.vars());
    for (int i = 0; i < m.row_rank_even(); ++i)
        t += m.at(i, i);
    for (int i = m.row_rank_even(); i < m.rows(); ++i)
        t -= m.at(i, i);
    return t;
}

} // namespace mfwb
