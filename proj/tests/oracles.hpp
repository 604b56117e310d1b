#pragma once

// Independent test oracles. These deliberately avoid the library's fast
// paths: determinants by cofactor expansion, subspace operations by
// exhaustive vector enumeration, the tame symbol evaluated symbolically,
// and cohomology classes decided by brute-force coboundary enumeration.

#include <tatekit/cohomology.hpp>
#include <tatekit/gerbe.hpp>
#include <tatekit/laurent.hpp>
#include <tatekit/matrix.hpp>
#include <tatekit/subspace.hpp>

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracles {

using namespace tatekit;

/// Determinant by cofactor expansion along the first row.
template <class K>
K cofactor_det(const Matrix<K>& m, const FieldCtx<K>& F) {
    std::size_t n = m.rows();
    if (n == 0) return F.one();
    if (n == 1) return m.at(0, 0);
    K acc = F.zero();
    for (std::size_t c = 0; c < n; ++c) {
        if (m.at(0, c).is_zero()) continue;
        Matrix<K> minor(n - 1, n - 1, F.zero());
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == c) continue;
                minor.at(i - 1, cc++) = m.at(i, j);
            }
        }
        K term = m.at(0, c) * cofactor_det(minor, F);
        if (c % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

/// All vectors of GF(p)^dim — usable only for tiny p^dim.
inline std::vector<std::vector<Fp>> all_vectors(std::size_t dim, const FieldCtx<Fp>& F) {
    std::vector<std::vector<Fp>> out;
    std::vector<Fp> cur(dim, F.zero());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == dim) {
            out.push_back(cur);
            return;
        }
        for (std::uint64_t x = 0; x < F.p; ++x) {
            cur[i] = Fp(x, F.p);
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

/// Membership check by exhaustive enumeration of span coefficients.
inline bool in_span_exhaustive(const std::vector<std::vector<Fp>>& gens,
                               const std::vector<Fp>& v, const FieldCtx<Fp>& F) {
    auto coeffs = all_vectors(gens.size(), F);
    for (const auto& c : coeffs) {
        std::vector<Fp> acc(v.size(), F.zero());
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j) acc[j] += c[i] * gens[i][j];
        if (acc == v) return true;
    }
    return false;
}

/// Classical tame symbol (−1)^{v(f)v(g)} (f^{v(g)}/g^{v(f)})(0) on k((t))^*,
/// evaluated symbolically from valuations and lowest coefficients.
template <class K>
K tame_symbol(const LaurentPoly<K>& f, const LaurentPoly<K>& g, const FieldCtx<K>& F) {
    long long vf = f.valuation(), vg = g.valuation();
    K value = pow_scalar(f.lowest_coeff(), vg) / pow_scalar(g.lowest_coeff(), vf);
    if ((vf % 2 != 0) && (vg % 2 != 0)) value = -value;
    return value;
}

/// Exhaustive 2-coboundary decision: enumerate every normalized lambda:
/// G -> k^* and test d(lambda) == r.
inline bool cohomologous_exhaustive(const FiniteGroup& G, const Cochain2<MulBand<Fp>>& r,
                                    const FieldCtx<Fp>& F) {
    std::size_t n = G.order();
    std::vector<Fp> lam(n, F.one());
    std::function<bool(std::size_t)> rec = [&](std::size_t g) -> bool {
        if (g == n) {
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (!(lam[a] * lam[b] / lam[G.mul(a, b)] == r.at(a, b))) return false;
            return true;
        }
        if (g == G.id()) return rec(g + 1);  // normalized
        for (std::uint64_t x = 1; x < F.p; ++x) {
            lam[g] = Fp(x, F.p);
            if (rec(g + 1)) return true;
        }
        lam[g] = F.one();
        return false;
    };
    return rec(0);
}

/// Exhaustive 3-coboundary decision for tiny groups and fields: enumerate
/// every normalized beta: G×G -> k^* and test d(beta) == r.
inline bool cohomologous3_exhaustive(const FiniteGroup& G, const Cochain3<MulBand<Fp>>& r,
                                     const FieldCtx<Fp>& F) {
    std::size_t n = G.order();
    std::vector<std::pair<std::size_t, std::size_t>> free_slots;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != G.id() && b != G.id()) free_slots.push_back({a, b});
    MulBand<Fp> band(F);
    Cochain2<MulBand<Fp>> beta(n, F.one());
    std::function<bool(std::size_t)> rec = [&](std::size_t s) -> bool {
        if (s == free_slots.size()) {
            auto d = coboundary2(G, beta, band);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    for (std::size_t c = 0; c < n; ++c)
                        if (!(d.at(a, b, c) == r.at(a, b, c))) return false;
            return true;
        }
        auto [a, b] = free_slots[s];
        for (std::uint64_t x = 1; x < F.p; ++x) {
            beta.at(a, b) = Fp(x, F.p);
            if (rec(s + 1)) return true;
        }
        beta.at(a, b) = F.one();
        return false;
    };
    return rec(0);
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline Fp random_fp(std::mt19937_64& r, const FieldCtx<Fp>& F, bool nonzero = false) {
    std::uniform_int_distribution<std::uint64_t> d(nonzero ? 1 : 0, F.p - 1);
    return Fp(d(r), F.p);
}

inline Rat random_rat(std::mt19937_64& r, bool nonzero = false) {
    std::uniform_int_distribution<long long> num(-9, 9);
    std::uniform_int_distribution<long long> den(1, 9);
    long long x = num(r);
    if (nonzero)
        while (x == 0) x = num(r);
    return Rat(x, den(r));
}

}  // namespace oracles
