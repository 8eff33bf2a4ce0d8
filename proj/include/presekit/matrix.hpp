#pragma once

#include <cassert>
#include <cstddef>
#include <optional>
#include <vector>

#include "field.hpp"

namespace presekit {

// Dense matrix over a field F. Vectors are columns; a matrix of shape
// (rows x cols) maps F^cols -> F^rows.
template <class F>
class Mat {
  public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, F::zero()) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F::one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        Mat r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
        return r;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        Mat r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
        return r;
    }
    friend Mat operator*(const F& c, const Mat& a) {
        Mat r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = c * a.a_[i];
        return r;
    }
    friend Mat operator*(const Mat& a, const Mat& b) {
        assert(a.cols_ == b.rows_);
        Mat r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& x = a(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r(i, j) += x * b(k, j);
            }
        return r;
    }

    std::vector<F> apply(const std::vector<F>& x) const {
        assert(x.size() == cols_);
        std::vector<F> y(rows_, F::zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero()) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_zero() const {
        for (const F& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    Mat submatrix_rows(const std::vector<std::size_t>& keep) const {
        Mat r(keep.size(), cols_);
        for (std::size_t i = 0; i < keep.size(); ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(keep[i], j);
        return r;
    }

    std::vector<F> row(std::size_t i) const {
        std::vector<F> r(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }
    std::vector<F> col(std::size_t j) const {
        std::vector<F> r(rows_);
        for (std::size_t i = 0; i < rows_; ++i) r[i] = (*this)(i, j);
        return r;
    }
    void set_row(std::size_t i, const std::vector<F>& r) {
        assert(r.size() == cols_);
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
    }
    void set_col(std::size_t j, const std::vector<F>& c) {
        assert(c.size() == rows_);
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
    }

    static Mat from_rows(const std::vector<std::vector<F>>& rows, std::size_t cols) {
        Mat m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
        return m;
    }
    static Mat from_cols(const std::vector<std::vector<F>>& cols, std::size_t rows) {
        Mat m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
        return m;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<F> a_;
};

// Reduced row echelon form. Deterministic pivot rule: scan columns left to
// right, pick the first row (top to bottom, among unused rows) with a nonzero
// entry. Rows end up ordered by pivot column.
template <class F>
struct Echelon {
    Mat<F> r;                          // the RREF
    std::vector<std::size_t> pivots;   // pivot column per echelon row
};

template <class F>
Echelon<F> rref(Mat<F> m) {
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t sel = m.rows();
        for (std::size_t i = rank; i < m.rows(); ++i)
            if (!m(i, col).is_zero()) { sel = i; break; }
        if (sel == m.rows()) continue;
        if (sel != rank)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(rank, j));
        F inv = m(rank, col).inv();
        for (std::size_t j = col; j < m.cols(); ++j) m(rank, j) = inv * m(rank, j);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == rank || m(i, col).is_zero()) continue;
            F c = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m(i, j) -= c * m(rank, j);
        }
        pivots.push_back(col);
        ++rank;
    }
    // Clear the (all-zero) tail rows for a canonical result.
    for (std::size_t i = rank; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = F::zero();
    return {std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(const Mat<F>& m) { return rref(m).pivots.size(); }

// Canonical kernel basis from the RREF: one vector per free column, entry 1 at
// the free column. Returned as columns of a (cols x nullity) matrix.
template <class F>
Mat<F> kernel_basis(const Mat<F>& m) {
    Echelon<F> e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : e.pivots) is_pivot[c] = true;
    std::size_t nullity = m.cols() - e.pivots.size();
    Mat<F> k(m.cols(), nullity);
    std::size_t out = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        k(c, out) = F::one();
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            k(e.pivots[r], out) = -e.r(r, c);
        ++out;
    }
    return k;
}

// Indices of coordinates whose unit vectors complete the column space of m to
// the full ambient space. Canonical: the non-pivot rows of m, i.e. the free
// coordinates of the row-reduced transpose.
template <class F>
std::vector<std::size_t> cokernel_coords(const Mat<F>& m) {
    Echelon<F> e = rref(m.transpose());
    std::vector<bool> is_pivot(m.rows(), false);
    for (std::size_t c : e.pivots) is_pivot[c] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (!is_pivot[i]) out.push_back(i);
    return out;
}

// Solve m x = b. Returns the canonical solution with zeros at free columns,
// or nullopt if inconsistent.
template <class F>
std::optional<std::vector<F>> solve(const Mat<F>& m, const std::vector<F>& b) {
    assert(b.size() == m.rows());
    Mat<F> aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    Echelon<F> e = rref(aug);
    for (std::size_t c : e.pivots)
        if (c == m.cols()) return std::nullopt;
    std::vector<F> x(m.cols(), F::zero());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        x[e.pivots[r]] = e.r(r, m.cols());
    return x;
}

// Does v lie in the column span of m?
template <class F>
bool in_span(const Mat<F>& m, const std::vector<F>& v) {
    return solve(m, v).has_value();
}

template <class F>
bool invertible(const Mat<F>& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

template <class F>
Mat<F> inverse(const Mat<F>& m) {
    assert(m.rows() == m.cols());
    std::size_t n = m.rows();
    Mat<F> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = F::one();
    }
    Echelon<F> e = rref(aug);
    if (e.pivots.size() != n || e.pivots.back() != n - 1)
        throw std::domain_error("inverse: singular matrix");
    Mat<F> r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = e.r(i, n + j);
    return r;
}

// Horizontal / vertical concatenation.
template <class F>
Mat<F> hcat(const Mat<F>& a, const Mat<F>& b) {
    assert(a.rows() == b.rows());
    Mat<F> r(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

template <class F>
Mat<F> vcat(const Mat<F>& a, const Mat<F>& b) {
    assert(a.cols() == b.cols());
    Mat<F> r(a.rows() + b.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) r(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i) r(a.rows() + i, j) = b(i, j);
    }
    return r;
}

// Incremental echelon span tracker, used where bases are grown one vector at
// a time (path reduction, Krylov loops). Rows are kept fully reduced.
template <class F>
class SpanTracker {
  public:
    explicit SpanTracker(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }

    // Reduce v against the current span (in place); returns the residue.
    std::vector<F> reduce(std::vector<F> v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const F& c = v[pivots_[r]];
            if (c.is_zero()) continue;
            F f = c;
            for (std::size_t j = 0; j < dim_; ++j)
                v[j] -= f * rows_[r][j];
        }
        return v;
    }

    // Insert v if independent. Returns true if the rank grew.
    bool insert(std::vector<F> v) {
        v = reduce(std::move(v));
        std::size_t p = dim_;
        for (std::size_t j = 0; j < dim_; ++j)
            if (!v[j].is_zero()) { p = j; break; }
        if (p == dim_) return false;
        F inv = v[p].inv();
        for (std::size_t j = 0; j < dim_; ++j) v[j] = inv * v[j];
        // Back-reduce existing rows.
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            F c = rows_[r][p];
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j)
                rows_[r][j] -= c * v[j];
        }
        // Keep rows sorted by pivot for a canonical basis.
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, p);
        return true;
    }

    bool contains(std::vector<F> v) const {
        v = reduce(std::move(v));
        for (const F& x : v)
            if (!x.is_zero()) return false;
        return true;
    }

    const std::vector<std::vector<F>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

  private:
    std::size_t dim_;
    std::vector<std::vector<F>> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace presekit
