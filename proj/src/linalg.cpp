#include "linalg.hpp"

#include "error.hpp"

namespace mfwb {

QMat QMat::identity(int n)
{
    QMat m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = Rat(1);
    return m;
}

QMat QMat::mul(const QMat& o) const
{
    if (cols_ != o.rows_)
        fail(Errc::validation, "matrix shape mismatch");
    QMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a.is_zero())
                continue;
            for (int j = 0; j < o.cols_; ++j)
                r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

QMat QMat::transposed() const
{
    QMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

std::vector<int> QMat::rref()
{
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int p = -1;
        for (int r = row; r < rows_; ++r)
            if (!at(r, col).is_zero()) {
                p = r;
                break;
            }
        if (p < 0)
            continue;
        if (p != row)
            for (int j = 0; j < cols_; ++j)
                std::swap(at(p, j), at(row, j));
        Rat inv = at(row, col).inverse();
        for (int j = col; j < cols_; ++j)
            at(row, j) *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == row || at(r, col).is_zero())
                continue;
            Rat f = at(r, col);
            for (int j = col; j < cols_; ++j)
                at(r, j) -= f * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int QMat::rank() const
{
    QMat copy = *this;
    return static_cast<int>(copy.rref().size());
}

Rat QMat::det() const
{
    if (rows_ != cols_)
        fail(Errc::validation, "determinant of non-square matrix");
    QMat m = *this;
    Rat d(1);
    for (int col = 0; col < cols_; ++col) {
        int p = -1;
        for (int r = col; r < rows_; ++r)
            if (!m.at(r, col).is_zero()) {
                p = r;
                break;
            }
        if (p < 0)
            return Rat(0);
        if (p != col) {
            for (int j = 0; j < cols_; ++j)
                std::swap(m.at(p, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        Rat inv = m.at(col, col).inverse();
        for (int r = col + 1; r < rows_; ++r) {
            if (m.at(r, col).is_zero())
                continue;
            Rat f = m.at(r, col) * inv;
            for (int j = col; j < cols_; ++j)
                m.at(r, j) -= f * m.at(col, j);
        }
    }
    return d;
}

std::vector<std::vector<Rat>> QMat::kernel_basis() const
{
    QMat m = *this;
    std::vector<int> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rat> v(cols_);
        v[free] = Rat(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rat>> QMat::solve(const std::vector<Rat>& b) const
{
    if (static_cast<int>(b.size()) != rows_)
        fail(Errc::validation, "right-hand side length mismatch");
    QMat aug(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j)
            aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    std::vector<int> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_)
        return std::nullopt; // inconsistent
    std::vector<Rat> x(cols_);
    for (size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug.at(static_cast<int>(r), cols_);
    return x;
}

void sparse_axpy(SparseVec& y, const Rat& a, const SparseVec& x)
{
    if (a.is_zero())
        return;
    for (const auto& [i, v] : x) {
        auto it = y.find(i);
        if (it == y.end()) {
            y.emplace(i, a * v);
        } else {
            it->second += a * v;
            if (it->second.is_zero())
                y.erase(it);
        }
    }
}

SparseVec SparseEchelon::reduce(SparseVec v) const
{
    while (!v.empty()) {
        int lead = v.begin()->first;
        auto it = rows_.find(lead);
        if (it == rows_.end())
            return v;
        sparse_axpy(v, -v.begin()->second, it->second);
    }
    return v;
}

bool SparseEchelon::insert(SparseVec v)
{
    v = reduce(std::move(v));
    if (v.empty())
        return false;
    Rat inv = v.begin()->second.inverse();
    for (auto& [i, c] : v)
        c *= inv;
    int lead = v.begin()->first;
    rows_.emplace(lead, std::move(v));
    return true;
}

std::vector<SparseVec> sparse_kernel(const std::vector<SparseVec>& images)
{
    // Column reduction with history: the history of a column whose image
    // reduces to zero is a kernel vector.
    std::map<int, std::pair<SparseVec, SparseVec>> rows; // lead -> (row, history)
    std::vector<SparseVec> kernel;
    for (int j = 0; j < static_cast<int>(images.size()); ++j) {
        SparseVec v = images[j];
        SparseVec hist;
        hist[j] = Rat(1);
        while (!v.empty()) {
            int lead = v.begin()->first;
            auto it = rows.find(lead);
            if (it == rows.end())
                break;
            Rat f = -v.begin()->second;
            sparse_axpy(v, f, it->second.first);
            sparse_axpy(hist, f, it->second.second);
        }
        if (v.empty()) {
            kernel.push_back(std::move(hist));
        } else {
            Rat inv = v.begin()->second.inverse();
            for (auto& [i, c] : v)
                c *= inv;
            for (auto& [i, c] : hist)
                c *= inv;
            int lead = v.begin()->first;
            rows.emplace(lead, std::make_pair(std::move(v), std::move(hist)));
        }
    }
    return kernel;
}

} // namespace mfwb
