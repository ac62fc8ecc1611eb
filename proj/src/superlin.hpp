#pragma once

#include <functional>
#include <vector>

#include "polyring.hpp"

namespace mfwb {

// Plain (ungraded) matrix with polynomial entries.
class PolyMat {
public:
    PolyMat() = default;
    PolyMat(VarsPtr vars, int rows, int cols);

    static PolyMat identity(const VarsPtr& vars, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const VarsPtr& vars() const { return vars_; }
    Polynomial& at(int r, int c) { return e_[r * cols_ + c]; }
    const Polynomial& at(int r, int c) const { return e_[r * cols_ + c]; }

    bool is_zero() const;
    PolyMat operator-() const;
    PolyMat& operator+=(const PolyMat& o);
    PolyMat& operator-=(const PolyMat& o);
    friend PolyMat operator+(PolyMat a, const PolyMat& b) { a += b; return a; }
    friend PolyMat operator-(PolyMat a, const PolyMat& b) { a -= b; return a; }
    friend PolyMat operator*(const PolyMat& a, const PolyMat& b);

    PolyMat scaled(const Rat& c) const;
    PolyMat scaled_poly(const Polynomial& p) const;
    PolyMat derivative(int var) const;
    PolyMat map_entries(const std::function<Polynomial(const Polynomial&)>& f) const;

    friend bool operator==(const PolyMat& a, const PolyMat& b);
    friend bool operator!=(const PolyMat& a, const PolyMat& b) { return !(a == b); }

    int max_entry_degree() const;

private:
    VarsPtr vars_;
    int rows_ = 0, cols_ = 0;
    std::vector<Polynomial> e_;
};

enum class Parity { Even, Odd, Mixed };

inline Parity parity_mul(Parity a, Parity b)
{
    if (a == Parity::Mixed || b == Parity::Mixed)
        return Parity::Mixed;
    return a == b ? Parity::Even : Parity::Odd;
}

inline const char* parity_name(Parity p)
{
    switch (p) {
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    default: return "mixed";
    }
}

// Z/2-graded matrix between graded free modules of ranks (q0|q1) -> (p0|p1).
// Rows and columns are split [even block | odd block]; the declared parity
// pins which blocks may be nonzero (Mixed matrices are containers for sums
// of homogeneous parts).
class SuperMatrix {
public:
    SuperMatrix() = default;
    SuperMatrix(VarsPtr vars, int p0, int p1, int q0, int q1, Parity parity);

    // Builds from an explicit entry grid and checks the declared parity's
    // zero-block pattern (Mixed accepts anything).
    static SuperMatrix from_entries(PolyMat entries, int p0, int p1, int q0, int q1,
                                    Parity parity);
    static SuperMatrix identity(const VarsPtr& vars, int r0, int r1);

    int rows() const { return p0_ + p1_; }
    int cols() const { return q0_ + q1_; }
    int row_rank_even() const { return p0_; }
    int row_rank_odd() const { return p1_; }
    int col_rank_even() const { return q0_; }
    int col_rank_odd() const { return q1_; }
    Parity parity() const { return parity_; }
    const VarsPtr& vars() const { return entries_.vars(); }

    const Polynomial& at(int r, int c) const { return entries_.at(r, c); }
    Polynomial& at(int r, int c) { return entries_.at(r, c); }
    const PolyMat& entries() const { return entries_; }

    bool row_is_odd(int r) const { return r >= p0_; }
    bool col_is_odd(int c) const { return c >= q0_; }
    // Parity of the homogeneous component an entry position belongs to.
    bool entry_is_odd(int r, int c) const { return row_is_odd(r) != col_is_odd(c); }

    bool is_zero() const { return entries_.is_zero(); }
    bool is_homogeneous() const { return parity_ != Parity::Mixed; }

    SuperMatrix operator-() const;
    friend SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b);
    friend SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b);
    friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b);

    SuperMatrix scaled(const Rat& c) const;
    SuperMatrix scaled_poly(const Polynomial& p) const;
    SuperMatrix derivative(int var) const;
    // Even part minus odd part: multiplication by (-1)^{parity} blockwise.
    SuperMatrix parity_flip() const;
    // Projection onto the even / odd homogeneous component.
    SuperMatrix homogeneous_part(Parity p) const;

    friend bool operator==(const SuperMatrix& a, const SuperMatrix& b);
    friend bool operator!=(const SuperMatrix& a, const SuperMatrix& b) { return !(a == b); }

private:
    void classify(); // derive the declared parity from the zero pattern

    PolyMat entries_;
    int p0_ = 0, p1_ = 0, q0_ = 0, q1_ = 0;
    Parity parity_ = Parity::Even;
};

// Graded trace: trace of the even-even block minus trace of the odd-odd
// block. Vanishes identically on odd matrices.
Polynomial supertrace(const SuperMatrix& m);

} // namespace mfwb
