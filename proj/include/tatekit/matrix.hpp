#pragma once

// Dense exact matrices with Gaussian elimination. Desk-scale only: the
// ambient dimensions in this project stay well below a hundred.

#include "tatekit/fields.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tatekit {

template <class K>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, const K& fill)
        : rows_(rows), cols_(cols), e_(rows * cols, fill) {}

    static Matrix identity(std::size_t n, const FieldCtx<K>& F) {
        Matrix m(n, n, F.zero());
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = F.one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    K& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const K& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    std::vector<K> row(std::size_t r) const {
        return std::vector<K>(e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_);
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Matrix: shape mismatch");
        if (rows_ == 0 || o.cols_ == 0) return Matrix(rows_, o.cols_, K());
        Matrix r(rows_, o.cols_, e_[0] - e_[0]);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const K& a = at(i, k);
                if (a.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r.at(i, j) += a * o.at(k, j);
            }
        return r;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<K> e_;
};

/// Reduced row-echelon form; returns the echelonized matrix (zero rows
/// dropped) and the pivot column list. Row space is preserved.
template <class K>
std::pair<Matrix<K>, std::vector<std::size_t>> rref(Matrix<K> m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = r;
        while (sel < m.rows() && m.at(sel, c).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
        K inv = m.at(r, c).inv();
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            K f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix<K> out(r, m.cols(), K());
    if (r > 0) {
        out = Matrix<K>(r, m.cols(), m.at(0, 0) - m.at(0, 0));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
    }
    return {out, pivots};
}

/// Determinant by Gaussian elimination with exact arithmetic.
template <class K>
K det(Matrix<K> m, const FieldCtx<K>& F) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
    std::size_t n = m.rows();
    K d = F.one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && m.at(sel, c).is_zero()) ++sel;
        if (sel == n) return F.zero();
        if (sel != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(c, j));
            d = -d;
        }
        d *= m.at(c, c);
        K inv = m.at(c, c).inv();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m.at(i, c).is_zero()) continue;
            K f = m.at(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return d;
}

/// Solve rows^T x = v, i.e. express v as a linear combination of the given
/// row vectors. Returns the coefficients or nullopt when v is outside the
/// span. The rows need not be independent; any valid combination is fine.
template <class K>
std::optional<std::vector<K>> express_in_rows(const std::vector<std::vector<K>>& rows,
                                              const std::vector<K>& v,
                                              const FieldCtx<K>& F) {
    std::size_t n = rows.size();
    if (n == 0) {
        for (const K& x : v)
            if (!x.is_zero()) return std::nullopt;
        return std::vector<K>{};
    }
    std::size_t dim = v.size();
    // augmented system: columns are the rows, RHS is v
    Matrix<K> a(dim, n + 1, F.zero());
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < dim; ++i) a.at(i, j) = rows[j][i];
    for (std::size_t i = 0; i < dim; ++i) a.at(i, n) = v[i];

    auto [e, piv] = rref(std::move(a));
    std::vector<K> x(n, F.zero());
    for (std::size_t i = 0; i < piv.size(); ++i) {
        if (piv[i] == n) return std::nullopt;  // inconsistent
        x[piv[i]] = e.at(i, n);
    }
    return x;
}

}  // namespace tatekit
