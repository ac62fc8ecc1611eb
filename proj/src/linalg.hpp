#pragma once

#include <map>
#include <optional>
#include <vector>

#include "rational.hpp"

namespace mfwb {

// Dense matrix over the rationals. Small sizes only; all operations exact.
class QMat {
public:
    QMat() = default;
    QMat(int rows, int cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static QMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int r, int c) { return e_[r * cols_ + c]; }
    const Rat& at(int r, int c) const { return e_[r * cols_ + c]; }

    QMat mul(const QMat& o) const;
    QMat transposed() const;

    // Reduced row echelon form in place; returns pivot column indices.
    std::vector<int> rref();
    int rank() const;
    Rat det() const; // square only
    std::vector<std::vector<Rat>> kernel_basis() const;
    // Solves A x = b exactly; nullopt when inconsistent.
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> e_;
};

// Sparse vector keyed by column index.
using SparseVec = std::map<int, Rat>;

void sparse_axpy(SparseVec& y, const Rat& a, const SparseVec& x); // y += a*x

// Incremental echelon over sparse rational vectors. Rows are normalized to a
// unit leading entry and indexed by leading column; insertion reduces the
// candidate against existing rows only (no back-substitution), which is all
// rank and membership queries need.
class SparseEchelon {
public:
    // Reduces v against the current rows; if a nonzero remainder is left it
    // becomes a new row and true is returned.
    bool insert(SparseVec v);
    SparseVec reduce(SparseVec v) const;
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    std::map<int, SparseVec> rows_; // leading column -> row (leading coeff 1)
};

// Kernel basis of the linear map sent column-by-column: images[j] is the
// image of source basis vector j in sparse target coordinates. Returned
// kernel vectors are in sparse source coordinates.
std::vector<SparseVec> sparse_kernel(const std::vector<SparseVec>& images);

} // namespace mfwb
