#pragma once

// Canonical subspaces of k^n: reduced row-echelon bases with recorded
// pivots. Two equal subspaces always produce identical representations,
// which is what makes determinant-line generators reproducible.

#include "tatekit/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace tatekit {

template <class K>
class Subspace {
public:
    Subspace() : ambient_(0) {}

    Subspace(std::size_t ambient_dim, const std::vector<std::vector<K>>& generators,
             const FieldCtx<K>& F)
        : ambient_(ambient_dim) {
        if (generators.empty()) return;
        Matrix<K> m(generators.size(), ambient_dim, F.zero());
        for (std::size_t i = 0; i < generators.size(); ++i) {
            if (generators[i].size() != ambient_dim)
                throw std::invalid_argument("Subspace: generator dimension mismatch");
            for (std::size_t j = 0; j < ambient_dim; ++j) m.at(i, j) = generators[i][j];
        }
        auto [e, piv] = rref(std::move(m));
        pivots_ = piv;
        basis_.reserve(e.rows());
        for (std::size_t i = 0; i < e.rows(); ++i) basis_.push_back(e.row(i));
    }

    static Subspace zero(std::size_t ambient_dim) {
        Subspace s;
        s.ambient_ = ambient_dim;
        return s;
    }

    static Subspace full(std::size_t ambient_dim, const FieldCtx<K>& F) {
        std::vector<std::vector<K>> gens;
        for (std::size_t i = 0; i < ambient_dim; ++i) {
            std::vector<K> v(ambient_dim, F.zero());
            v[i] = F.one();
            gens.push_back(std::move(v));
        }
        return Subspace(ambient_dim, gens, F);
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<std::vector<K>>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const std::vector<K>& v) const {
        std::vector<K> w = v;
        reduce(w);
        return std::all_of(w.begin(), w.end(), [](const K& x) { return x.is_zero(); });
    }

    /// Reduce v modulo this subspace (subtract the pivot-matching part).
    void reduce(std::vector<K>& v) const {
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            const K& c = v[pivots_[i]];
            if (c.is_zero()) continue;
            K f = c;
            for (std::size_t j = 0; j < ambient_; ++j) v[j] -= f * basis_[i][j];
        }
    }

    bool contains(const Subspace& other) const {
        for (const auto& b : other.basis_)
            if (!contains(b)) return false;
        return true;
    }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && pivots_ == o.pivots_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    std::size_t ambient_;
    std::vector<std::vector<K>> basis_;  // RREF rows, pivot order
    std::vector<std::size_t> pivots_;
};

template <class K>
Subspace<K> subspace_sum(const Subspace<K>& a, const Subspace<K>& b, const FieldCtx<K>& F) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("subspace_sum: ambient mismatch");
    std::vector<std::vector<K>> gens = a.basis();
    gens.insert(gens.end(), b.basis().begin(), b.basis().end());
    return Subspace<K>(a.ambient_dim(), gens, F);
}

/// Zassenhaus-style intersection: row-reduce [A|A; B|0] and read the
/// intersection from rows whose left half vanished.
template <class K>
Subspace<K> subspace_intersect(const Subspace<K>& a, const Subspace<K>& b, const FieldCtx<K>& F) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("subspace_intersect: ambient mismatch");
    std::size_t n = a.ambient_dim();
    std::size_t rows = a.dim() + b.dim();
    if (rows == 0) return Subspace<K>::zero(n);
    Matrix<K> m(rows, 2 * n, F.zero());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m.at(i, j) = a.basis()[i][j];
            m.at(i, n + j) = a.basis()[i][j];
        }
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(a.dim() + i, j) = b.basis()[i][j];
    auto [e, piv] = rref(std::move(m));
    std::vector<std::vector<K>> gens;
    for (std::size_t i = 0; i < e.rows(); ++i) {
        if (piv[i] < n) continue;  // row still has a left-half pivot
        std::vector<K> v(n, F.zero());
        for (std::size_t j = 0; j < n; ++j) v[j] = e.at(i, n + j);
        gens.push_back(std::move(v));
    }
    return Subspace<K>(n, gens, F);
}

/// Ordered coset basis of outer/inner: the subset of outer's RREF rows that
/// stays independent modulo inner, taken in pivot (canonical) order.
template <class K>
std::vector<std::vector<K>> quotient_basis(const Subspace<K>& inner, const Subspace<K>& outer,
                                           const FieldCtx<K>& F) {
    if (inner.ambient_dim() != outer.ambient_dim())
        throw std::invalid_argument("quotient_basis: ambient mismatch");
    if (!outer.contains(inner))
        throw std::invalid_argument("quotient_basis: inner not contained in outer");
    std::vector<std::vector<K>> picked;
    Subspace<K> span = inner;
    for (const auto& row : outer.basis()) {
        if (span.contains(row)) continue;
        picked.push_back(row);
        std::vector<std::vector<K>> gens = span.basis();
        gens.push_back(row);
        span = Subspace<K>(outer.ambient_dim(), gens, F);
    }
    return picked;
}

}  // namespace tatekit
