#pragma once

// Laurent polynomials in one variable and square matrices over them.
// These are the raw data of GL-elements acting on truncated loop spaces.

#include "tatekit/fields.hpp"
#include "tatekit/matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace tatekit {

template <class K>
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly term(const K& c, int e) {
        LaurentPoly p;
        if (!c.is_zero()) p.c_[e] = c;
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    const std::map<int, K>& terms() const { return c_; }

    void add_term(int e, const K& c) {
        if (c.is_zero()) return;
        auto it = c_.find(e);
        if (it == c_.end()) {
            c_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    LaurentPoly operator+(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        for (const auto& [e, c] : o.c_) r.add_term(e, c);
        return r;
    }
    LaurentPoly operator*(const LaurentPoly& o) const {
        LaurentPoly r;
        for (const auto& [e1, c1] : c_)
            for (const auto& [e2, c2] : o.c_) r.add_term(e1 + e2, c1 * c2);
        return r;
    }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : c_) r.c_[e] = -c;
        return r;
    }

    bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }

    int min_deg() const { return c_.empty() ? 0 : c_.begin()->first; }
    int max_deg() const { return c_.empty() ? 0 : c_.rbegin()->first; }

    /// Valuation (lowest exponent); only defined for nonzero polynomials.
    int valuation() const {
        if (c_.empty()) throw std::domain_error("LaurentPoly: valuation of zero");
        return c_.begin()->first;
    }
    const K& lowest_coeff() const {
        if (c_.empty()) throw std::domain_error("LaurentPoly: lowest coeff of zero");
        return c_.begin()->second;
    }

private:
    std::map<int, K> c_;
};

template <class K>
class LaurentMatrix {
public:
    LaurentMatrix() : n_(0) {}
    explicit LaurentMatrix(std::size_t n) : n_(n), e_(n * n) {}

    static LaurentMatrix identity(std::size_t n, const FieldCtx<K>& F) {
        LaurentMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = LaurentPoly<K>::term(F.one(), 0);
        return m;
    }

    std::size_t n() const { return n_; }
    LaurentPoly<K>& at(std::size_t r, std::size_t c) { return e_[r * n_ + c]; }
    const LaurentPoly<K>& at(std::size_t r, std::size_t c) const { return e_[r * n_ + c]; }

    LaurentMatrix operator*(const LaurentMatrix& o) const {
        if (n_ != o.n_) throw std::invalid_argument("LaurentMatrix: size mismatch");
        LaurentMatrix r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                LaurentPoly<K> s;
                for (std::size_t k = 0; k < n_; ++k) s = s + at(i, k) * o.at(k, j);
                r.at(i, j) = s;
            }
        return r;
    }

    bool operator==(const LaurentMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }

    bool is_identity() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                const auto& t = at(i, j).terms();
                if (i == j) {
                    if (t.size() != 1 || t.begin()->first != 0) return false;
                    K c = t.begin()->second;
                    if (!(c * c.inv() == c)) return false;  // c == 1
                } else if (!t.empty()) {
                    return false;
                }
            }
        return true;
    }

    /// Largest absolute degree shift over all entries.
    int degree_span() const {
        int m = 0;
        for (const auto& p : e_) {
            if (p.is_zero()) continue;
            m = std::max({m, std::abs(p.min_deg()), std::abs(p.max_deg())});
        }
        return m;
    }

    /// Most negative degree shift over all entries (0 for an empty matrix).
    int min_shift() const {
        bool any = false;
        int m = 0;
        for (const auto& p : e_) {
            if (p.is_zero()) continue;
            m = any ? std::min(m, p.min_deg()) : p.min_deg();
            any = true;
        }
        return m;
    }

private:
    std::size_t n_;
    std::vector<LaurentPoly<K>> e_;
};

}  // namespace tatekit
