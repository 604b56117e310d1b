#pragma once

// Truncated 1-Tate spaces V((t)) on a finite degree window, their lattices,
// relative determinant lines, determinant/dimension theories and the central
// extension cocycle of the automorphism group.
//
// Conventions fixed here and used everywhere downstream:
//  * monomial order: e_i t^j sorted by (j ascending, then i ascending);
//  * a lattice is head ⊕ full tail, stored canonically with the minimal cut;
//  * canonical quotient bases are greedy subsets of RREF rows in pivot order;
//  * truncation never silently drops data: operations throw WindowError
//    instead of corrupting an exact answer.

#include "tatekit/graded_line.hpp"
#include "tatekit/laurent.hpp"
#include "tatekit/report.hpp"
#include "tatekit/subspace.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tatekit {

struct WindowError : std::runtime_error {
    explicit WindowError(const std::string& msg) : std::runtime_error(msg) {}
};

template <class K>
struct Tate1Space {
    FieldCtx<K> F;
    int n;      // base dimension
    int t_lo;   // window [t_lo, t_hi)
    int t_hi;

    Tate1Space(FieldCtx<K> f, int base_dim, int lo, int hi)
        : F(std::move(f)), n(base_dim), t_lo(lo), t_hi(hi) {
        if (base_dim <= 0 || lo >= hi) throw std::invalid_argument("Tate1Space: bad parameters");
    }

    std::size_t ambient_dim() const { return static_cast<std::size_t>(n) * (t_hi - t_lo); }
    std::size_t index(int i, int j) const {  // i in [0,n), j in [t_lo, t_hi)
        return static_cast<std::size_t>(j - t_lo) * n + i;
    }
    int degree_of(std::size_t idx) const { return t_lo + static_cast<int>(idx) / n; }
    int base_of(std::size_t idx) const { return static_cast<int>(idx) % n; }

    Tate1Space widened(int k) const { return Tate1Space(F, n, t_lo - k, t_hi + k); }

    bool same_window(const Tate1Space& o) const {
        return n == o.n && t_lo == o.t_lo && t_hi == o.t_hi;
    }
};

/// Sparse vector with unbounded degrees, keyed by (degree, base index).
template <class K>
using LaurentVec = std::map<std::pair<int, int>, K>;

template <class K>
void lv_add(LaurentVec<K>& v, int j, int i, const K& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(j, i);
    auto it = v.find(key);
    if (it == v.end()) {
        v[key] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

template <class K>
LaurentVec<K> lv_from_window(const Tate1Space<K>& sp, const std::vector<K>& w) {
    LaurentVec<K> v;
    for (std::size_t idx = 0; idx < w.size(); ++idx)
        if (!w[idx].is_zero()) v[{sp.degree_of(idx), sp.base_of(idx)}] = w[idx];
    return v;
}

/// Materialize a Laurent vector in the window. Coordinates at degree >=
/// absorb_from are dropped (they lie in a tail that is understood to be
/// present in full); anything else outside the window is a hard error.
template <class K>
std::vector<K> lv_to_window(const Tate1Space<K>& sp, const LaurentVec<K>& v, int absorb_from) {
    std::vector<K> w(sp.ambient_dim(), sp.F.zero());
    for (const auto& [key, c] : v) {
        auto [j, i] = key;
        if (j >= absorb_from) continue;
        if (j < sp.t_lo || j >= sp.t_hi) {
            std::ostringstream os;
            os << "window exhaustion: coordinate at degree " << j << " outside ["
               << sp.t_lo << "," << sp.t_hi << ")";
            throw WindowError(os.str());
        }
        w[sp.index(i, j)] = c;
    }
    return w;
}

/// A lattice: head ⊕ span{e_i t^j : j >= cut}, canonical (minimal cut).
template <class K>
class Lattice1 {
public:
    Lattice1() = default;

    static Lattice1 standard(const Tate1Space<K>& sp) { return shifted_standard(sp, 0); }

    /// t^a · L0, i.e. the full tail from degree a on.
    static Lattice1 shifted_standard(const Tate1Space<K>& sp, int a) {
        if (a < sp.t_lo || a > sp.t_hi)
            throw WindowError("shifted_standard: cut outside window");
        Lattice1 L;
        L.sp_ = sp;
        L.cut_ = a;
        L.head_ = Subspace<K>::zero(sp.ambient_dim());
        return L;
    }

    static Lattice1 zero(const Tate1Space<K>& sp) { return shifted_standard(sp, sp.t_hi); }
    static Lattice1 full(const Tate1Space<K>& sp) { return shifted_standard(sp, sp.t_lo); }

    /// From arbitrary generators plus a tail cut; canonicalizes.
    static Lattice1 from_data(const Tate1Space<K>& sp, int cut,
                              const std::vector<std::vector<K>>& head_gens) {
        if (cut < sp.t_lo || cut > sp.t_hi) throw WindowError("Lattice1: cut outside window");
        std::vector<std::vector<K>> gens = head_gens;
        for (int j = cut; j < sp.t_hi; ++j)
            for (int i = 0; i < sp.n; ++i) {
                std::vector<K> v(sp.ambient_dim(), sp.F.zero());
                v[sp.index(i, j)] = sp.F.one();
                gens.push_back(std::move(v));
            }
        return from_subspace(sp, Subspace<K>(sp.ambient_dim(), gens, sp.F));
    }

    /// Canonical form of an arbitrary window subspace: find the minimal cut b
    /// with full tail from b on, split the RREF basis accordingly.
    static Lattice1 from_subspace(const Tate1Space<K>& sp, const Subspace<K>& s) {
        int b = sp.t_hi;
        while (b > sp.t_lo) {
            bool full_level = true;
            for (int i = 0; i < sp.n && full_level; ++i) {
                std::vector<K> v(sp.ambient_dim(), sp.F.zero());
                v[sp.index(i, b - 1)] = sp.F.one();
                full_level = s.contains(v);
            }
            if (!full_level) break;
            --b;
        }
        std::vector<std::vector<K>> head_rows;
        for (const auto& row : s.basis()) {
            std::size_t pivot_idx = 0;
            while (row[pivot_idx].is_zero()) ++pivot_idx;
            if (sp.degree_of(pivot_idx) < b) head_rows.push_back(row);
        }
        // rows with pivot below the cut cannot touch tail coordinates (those
        // are pivot columns of the tail rows), so this split is exact
        Lattice1 L;
        L.sp_ = sp;
        L.cut_ = b;
        L.head_ = Subspace<K>(sp.ambient_dim(), head_rows, sp.F);
        return L;
    }

    const Tate1Space<K>& space() const { return *sp_; }
    int cut() const { return cut_; }
    const Subspace<K>& head() const { return head_; }

    Subspace<K> full_subspace() const {
        std::vector<std::vector<K>> gens = head_.basis();
        for (int j = cut_; j < sp_->t_hi; ++j)
            for (int i = 0; i < sp_->n; ++i) {
                std::vector<K> v(sp_->ambient_dim(), sp_->F.zero());
                v[sp_->index(i, j)] = sp_->F.one();
                gens.push_back(std::move(v));
            }
        return Subspace<K>(sp_->ambient_dim(), gens, sp_->F);
    }

    std::size_t dim_in_window() const {
        return head_.dim() + static_cast<std::size_t>(sp_->n) * (sp_->t_hi - cut_);
    }

    bool is_zero() const { return cut_ == sp_->t_hi && head_.dim() == 0; }

    bool operator==(const Lattice1& o) const {
        return sp_->same_window(*o.sp_) && cut_ == o.cut_ && head_ == o.head_;
    }
    bool operator!=(const Lattice1& o) const { return !(*this == o); }

    /// Rebuild the same lattice inside a wider window.
    Lattice1 in_space(const Tate1Space<K>& wider) const {
        if (wider.n != sp_->n) throw std::invalid_argument("in_space: base dim mismatch");
        std::vector<std::vector<K>> gens;
        for (const auto& row : head_.basis()) {
            std::vector<K> v(wider.ambient_dim(), wider.F.zero());
            for (std::size_t idx = 0; idx < row.size(); ++idx)
                if (!row[idx].is_zero())
                    v[wider.index(sp_->base_of(idx), sp_->degree_of(idx))] = row[idx];
            gens.push_back(std::move(v));
        }
        for (int j = cut_; j < wider.t_hi; ++j)
            for (int i = 0; i < wider.n; ++i) {
                std::vector<K> v(wider.ambient_dim(), wider.F.zero());
                v[wider.index(i, j)] = wider.F.one();
                gens.push_back(std::move(v));
            }
        return from_subspace(wider, Subspace<K>(wider.ambient_dim(), gens, wider.F));
    }

private:
    std::optional<Tate1Space<K>> sp_;
    int cut_ = 0;
    Subspace<K> head_;
};

template <class K>
bool lattice_contains(const Lattice1<K>& outer, const Lattice1<K>& inner) {
    return outer.full_subspace().contains(inner.full_subspace());
}

template <class K>
Lattice1<K> lattice_intersect(const Lattice1<K>& a, const Lattice1<K>& b) {
    const auto& sp = a.space();
    return Lattice1<K>::from_subspace(
        sp, subspace_intersect(a.full_subspace(), b.full_subspace(), sp.F));
}

template <class K>
Lattice1<K> lattice_sum(const Lattice1<K>& a, const Lattice1<K>& b) {
    const auto& sp = a.space();
    return Lattice1<K>::from_subspace(sp,
                                      subspace_sum(a.full_subspace(), b.full_subspace(), sp.F));
}

template <class K>
long long quotient_dim(const Lattice1<K>& inner, const Lattice1<K>& outer) {
    if (!lattice_contains(outer, inner))
        throw std::invalid_argument("quotient_dim: containment violation");
    return static_cast<long long>(outer.dim_in_window()) -
           static_cast<long long>(inner.dim_in_window());
}

/// rel_dim(L1, L2) = dim(L1/L1∩L2) − dim(L2/L1∩L2); a 1-cocycle in its slots.
template <class K>
long long rel_dim(const Lattice1<K>& a, const Lattice1<K>& b) {
    Lattice1<K> m = lattice_intersect(a, b);
    return (static_cast<long long>(a.dim_in_window()) - static_cast<long long>(m.dim_in_window())) -
           (static_cast<long long>(b.dim_in_window()) - static_cast<long long>(m.dim_in_window()));
}

/// Canonical ordered coset basis of outer/inner as window vectors.
template <class K>
std::vector<std::vector<K>> lattice_quotient_basis(const Lattice1<K>& inner,
                                                   const Lattice1<K>& outer) {
    return quotient_basis(inner.full_subspace(), outer.full_subspace(), outer.space().F);
}

// ---------------------------------------------------------------------------
// GL elements
// ---------------------------------------------------------------------------

/// Continuous automorphism given by a Laurent-polynomial matrix with an
/// explicitly supplied inverse. The library verifies the inverse rather than
/// computing one; the margin is certified by inspecting monomial degrees.
template <class K>
class GL1Element {
public:
    GL1Element() = default;
    GL1Element(LaurentMatrix<K> fwd, LaurentMatrix<K> inv) : g_(std::move(fwd)), gi_(std::move(inv)) {
        if (g_.n() != gi_.n()) throw std::invalid_argument("GL1Element: size mismatch");
        if (!(g_ * gi_).is_identity() || !(gi_ * g_).is_identity())
            throw std::invalid_argument("GL1Element: supplied inverse is not an inverse");
        margin_ = std::max(g_.degree_span(), gi_.degree_span());
    }

    static GL1Element identity(std::size_t n, const FieldCtx<K>& F) {
        return GL1Element(LaurentMatrix<K>::identity(n, F), LaurentMatrix<K>::identity(n, F));
    }

    /// c · t^a on the i-th basis line (monomial diagonal element).
    static GL1Element monomial(std::size_t n, const FieldCtx<K>& F, std::size_t i, const K& c,
                               int a) {
        if (c.is_zero()) throw std::invalid_argument("GL1Element: zero scale");
        LaurentMatrix<K> m = LaurentMatrix<K>::identity(n, F);
        LaurentMatrix<K> mi = LaurentMatrix<K>::identity(n, F);
        m.at(i, i) = LaurentPoly<K>::term(c, a);
        mi.at(i, i) = LaurentPoly<K>::term(c.inv(), -a);
        return GL1Element(std::move(m), std::move(mi));
    }

    /// Elementary transvection: e_j ↦ e_j + p(t)·e_i (i ≠ j).
    static GL1Element elementary(std::size_t n, const FieldCtx<K>& F, std::size_t i, std::size_t j,
                                 const LaurentPoly<K>& p) {
        if (i == j) throw std::invalid_argument("GL1Element: elementary needs i != j");
        LaurentMatrix<K> m = LaurentMatrix<K>::identity(n, F);
        LaurentMatrix<K> mi = LaurentMatrix<K>::identity(n, F);
        m.at(i, j) = p;
        mi.at(i, j) = -p;
        return GL1Element(std::move(m), std::move(mi));
    }

    const LaurentMatrix<K>& matrix() const { return g_; }
    const LaurentMatrix<K>& inverse_matrix() const { return gi_; }
    int margin() const { return margin_; }
    std::size_t n() const { return g_.n(); }

    GL1Element operator*(const GL1Element& o) const {
        return GL1Element(g_ * o.g_, o.gi_ * gi_);
    }
    GL1Element inverse() const { return GL1Element(gi_, g_); }

    bool operator==(const GL1Element& o) const { return g_ == o.g_; }

    LaurentVec<K> apply_vec(const LaurentVec<K>& v) const {
        LaurentVec<K> out;
        for (const auto& [key, c] : v) {
            auto [j, i] = key;
            for (std::size_t r = 0; r < g_.n(); ++r)
                for (const auto& [e, a] : g_.at(r, i).terms())
                    lv_add(out, j + e, static_cast<int>(r), c * a);
        }
        return out;
    }

private:
    LaurentMatrix<K> g_, gi_;
    int margin_ = 0;
};

/// Image lattice g·L in canonical form. The guaranteed tail of the image is
/// T_{cut − minshift(g⁻¹)} (a vector of degree j maps under g⁻¹ into degrees
/// >= j + minshift(g⁻¹)); the finitely many boundary tail monomials whose
/// images reach below that tail are pushed through g exactly.
template <class K>
Lattice1<K> apply(const GL1Element<K>& g, const Lattice1<K>& L) {
    const Tate1Space<K>& sp = L.space();
    if (static_cast<int>(g.n()) != sp.n) throw std::invalid_argument("apply: base dim mismatch");
    int newcut = L.cut() - g.inverse_matrix().min_shift();
    if (newcut > sp.t_hi)
        throw WindowError("apply: image cut exceeds window top");
    int gen_top = newcut - g.matrix().min_shift();
    std::vector<std::vector<K>> gens;
    auto push_image = [&](const LaurentVec<K>& src) {
        gens.push_back(lv_to_window(sp, g.apply_vec(src), newcut));
    };
    for (const auto& row : L.head().basis()) push_image(lv_from_window(sp, row));
    for (int j = L.cut(); j < gen_top; ++j)
        for (int i = 0; i < sp.n; ++i) {
            LaurentVec<K> v;
            v[{j, i}] = sp.F.one();
            push_image(v);
        }
    return Lattice1<K>::from_data(sp, newcut, gens);
}

// ---------------------------------------------------------------------------
// Relative determinant calculus
// ---------------------------------------------------------------------------

namespace det1 {

/// Express v in the span of `rows` modulo the lattice N: drop coordinates in
/// N's guaranteed tail, reduce by N's head and solve in the reduced rows.
template <class K>
std::vector<K> express_mod(const Tate1Space<K>& sp, const LaurentVec<K>& v,
                           const std::vector<std::vector<K>>& rows, const Lattice1<K>& N) {
    Subspace<K> nfull = N.full_subspace();
    std::vector<K> w = lv_to_window(sp, v, N.cut());
    nfull.reduce(w);
    std::vector<std::vector<K>> red = rows;
    for (auto& r : red) nfull.reduce(r);
    auto sol = express_in_rows(red, w, sp.F);
    if (!sol) throw std::logic_error("express_mod: vector outside quotient span");
    return *sol;
}

/// det of the base change expressing `vecs` (Laurent images) in the
/// canonical quotient basis of X/N.
template <class K>
K base_change_det(const std::vector<LaurentVec<K>>& vecs, const Lattice1<K>& X,
                  const Lattice1<K>& N) {
    const Tate1Space<K>& sp = X.space();
    auto qb = lattice_quotient_basis(N, X);
    if (qb.size() != vecs.size())
        throw std::logic_error("base_change_det: rank mismatch");
    if (qb.empty()) return sp.F.one();
    Matrix<K> C(vecs.size(), vecs.size(), sp.F.zero());
    for (std::size_t r = 0; r < vecs.size(); ++r) {
        auto coeff = express_mod(sp, vecs[r], qb, N);
        for (std::size_t c = 0; c < vecs.size(); ++c) C.at(r, c) = coeff[c];
    }
    return det(C, sp.F);
}

/// mu(X,Y,M): concat(qb(X/Y), qb(Y/M)) expressed in qb(X/M), for X ⊇ Y ⊇ M.
template <class K>
K mu(const Lattice1<K>& X, const Lattice1<K>& Y, const Lattice1<K>& M) {
    const Tate1Space<K>& sp = X.space();
    std::vector<LaurentVec<K>> vecs;
    for (const auto& v : lattice_quotient_basis(Y, X)) vecs.push_back(lv_from_window(sp, v));
    for (const auto& v : lattice_quotient_basis(M, Y)) vecs.push_back(lv_from_window(sp, v));
    return base_change_det(vecs, X, M);
}

/// Frame coordinate n_M(X,Y) of the canonical generator of rel_det(X,Y)
/// inside Det(X/M) ⊗ Det(Y/M)^*.
template <class K>
K frame_coord(const Lattice1<K>& X, const Lattice1<K>& Y, const Lattice1<K>& M) {
    Lattice1<K> Z = lattice_intersect(X, Y);
    return mu(X, Z, M) / mu(Y, Z, M);
}

}  // namespace det1

/// Canonical generator line of rel_det(L1, L2).
template <class K>
GradedLine<K> rel_det(const Lattice1<K>& a, const Lattice1<K>& b) {
    return GradedLine<K>(rel_dim(a, b), a.space().F.one());
}

/// Composition scalar of rel_det(A,B) ⊗ rel_det(B,C) → rel_det(A,C) on
/// canonical generators. Associative: gamma(A,B,C)·gamma(A,C,D) =
/// gamma(B,C,D)·gamma(A,B,D).
template <class K>
K rel_det_compose(const Lattice1<K>& A, const Lattice1<K>& B, const Lattice1<K>& C) {
    Lattice1<K> M = lattice_intersect(lattice_intersect(A, B), C);
    K nab = det1::frame_coord(A, B, M);
    K nbc = det1::frame_coord(B, C, M);
    K nac = det1::frame_coord(A, C, M);
    return nab * nbc / nac;
}

/// Transport coordinate of g: canonical generator of rel_det(X, Y) mapped to
/// the canonical generator of rel_det(gX, gY).
template <class K>
K transport_coord(const GL1Element<K>& g, const Lattice1<K>& X, const Lattice1<K>& Y) {
    const Tate1Space<K>& sp = X.space();
    Lattice1<K> Z = lattice_intersect(X, Y);
    Lattice1<K> gZ = apply(g, Z);
    Lattice1<K> gX = apply(g, X);
    Lattice1<K> gY = apply(g, Y);
    auto push_images = [&](const Lattice1<K>& from) {
        std::vector<LaurentVec<K>> vecs;
        for (const auto& v : lattice_quotient_basis(Z, from))
            vecs.push_back(g.apply_vec(lv_from_window(sp, v)));
        return vecs;
    };
    K num = det1::base_change_det(push_images(X), gX, gZ);
    K den = det1::base_change_det(push_images(Y), gY, gZ);
    return num / den;
}

enum class Grading { Ungraded, Graded };

/// Canonical trivialization s(g): the coordinate of the g-image of the
/// canonical coset basis of L0/(L0 ∩ g^{-1}L0) inside the canonical basis of
/// gL0/(gL0 ∩ L0). Depends only on g, L0 and the canonical orders.
template <class K>
K canonical_trivialization(const GL1Element<K>& g, const Lattice1<K>& L0) {
    const Tate1Space<K>& sp = L0.space();
    Lattice1<K> gL0 = apply(g, L0);
    Lattice1<K> Z = lattice_intersect(L0, apply(g.inverse(), L0));
    Lattice1<K> gZ = apply(g, Z);  // = gL0 ∩ L0
    std::vector<LaurentVec<K>> vecs;
    for (const auto& v : lattice_quotient_basis(Z, L0))
        vecs.push_back(g.apply_vec(lv_from_window(sp, v)));
    return det1::base_change_det(vecs, gL0, gZ);
}

/// The extension 2-cocycle: the coordinate comparing s(g) ∘ g_*(s(h)) with
/// s(gh) inside rel_det(ghL0, L0). In the graded variant the composition of
/// the two hom-lines picks up the Koszul sign of their degrees.
template <class K>
K cocycle(const GL1Element<K>& g, const GL1Element<K>& h, const Lattice1<K>& L0,
          Grading mode = Grading::Ungraded) {
    const Tate1Space<K>& sp = L0.space();
    Lattice1<K> hL0 = apply(h, L0);
    Lattice1<K> ghL0 = apply(g, hL0);
    Lattice1<K> gL0 = apply(g, L0);
    K value = canonical_trivialization(g, L0) * canonical_trivialization(h, L0) *
              transport_coord(g, hL0, L0) * rel_det_compose(ghL0, gL0, L0) /
              canonical_trivialization(g * h, L0);
    if (mode == Grading::Graded)
        value = value * koszul_sign<K>(rel_dim(hL0, L0), rel_dim(gL0, L0), sp.F);
    return value;
}

/// Commutator pairing ⟨g,h⟩ = c(g,h)/c(h,g) on commuting pairs; independent
/// of the section and of the grading variant.
template <class K>
K commutator_pairing(const GL1Element<K>& g, const GL1Element<K>& h, const Lattice1<K>& L0) {
    if (!(g.matrix() * h.matrix() == h.matrix() * g.matrix()))
        throw std::invalid_argument("commutator_pairing: elements do not commute");
    return cocycle(g, h, L0) / cocycle(h, g, L0);
}

// ---------------------------------------------------------------------------
// Determinant theories
// ---------------------------------------------------------------------------

template <class K>
struct DetTheory1 {
    Tate1Space<K> sp;
    std::vector<Lattice1<K>> domain;
    std::vector<GradedLine<K>> lines;
    // glue[(i,j)] realizes line(L_i) ⊗ Det(L_j/L_i) → line(L_j) for L_i ⊆ L_j
    std::map<std::pair<std::size_t, std::size_t>, K> glue;
    Grading mode = Grading::Ungraded;
};

/// The canonical theory Δ_L = rel_det(L, L0) with glue from the composition
/// scalars. In the graded variant the glue carries the sign that makes the
/// triangle commute in the super convention.
template <class K>
DetTheory1<K> canonical_det_theory(const Tate1Space<K>& sp,
                                   const std::vector<Lattice1<K>>& domain,
                                   const Lattice1<K>& L0, Grading mode = Grading::Ungraded) {
    DetTheory1<K> D{sp, domain, {}, {}, mode};
    for (const auto& L : domain) D.lines.push_back(GradedLine<K>(rel_dim(L, L0), sp.F.one()));
    for (std::size_t i = 0; i < domain.size(); ++i)
        for (std::size_t j = 0; j < domain.size(); ++j) {
            if (i == j || !lattice_contains(domain[j], domain[i])) continue;
            K v = rel_det_compose(domain[j], domain[i], L0);
            if (mode == Grading::Graded) {
                long long di = rel_dim(domain[i], L0);
                long long dij = rel_dim(domain[j], L0) - di;
                v = v * koszul_sign<K>(di, dij, sp.F);
            }
            D.glue[{i, j}] = v;
        }
    return D;
}

/// Triangle coherence for every nested triple with recorded glue.
template <class K>
Report det_theory_check(const DetTheory1<K>& D) {
    Report rep;
    rep.task = "verify-dettheory";
    const FieldCtx<K>& F = D.sp.F;
    bool ok = true;
    std::string witness;
    std::size_t n = D.domain.size();
    std::size_t triples = 0;
    for (std::size_t i = 0; i < n && ok; ++i)
        for (std::size_t j = 0; j < n && ok; ++j)
            for (std::size_t k = 0; k < n && ok; ++k) {
                if (i == j || j == k || i == k) continue;
                auto g12 = D.glue.find({i, j});
                auto g23 = D.glue.find({j, k});
                auto g13 = D.glue.find({i, k});
                if (g12 == D.glue.end() || g23 == D.glue.end() || g13 == D.glue.end()) continue;
                ++triples;
                K comp = rel_det_compose(D.domain[k], D.domain[j], D.domain[i]);
                if (D.mode == Grading::Graded) {
                    long long d21 = quotient_dim(D.domain[i], D.domain[j]);
                    long long d32 = quotient_dim(D.domain[j], D.domain[k]);
                    comp = comp * koszul_sign<K>(d21, d32, F);
                }
                K lhs = g12->second * g23->second;
                K rhs = comp * g13->second;
                if (!(lhs == rhs)) {
                    ok = false;
                    std::ostringstream os;
                    os << "triangle fails at triple (" << i << "," << j << "," << k << ")";
                    witness = os.str();
                }
            }
    rep.add("triangle-coherence", ok, witness);
    rep.values["nested_triples_checked"] = triples;
    return rep;
}

// ---------------------------------------------------------------------------
// Dimension theories
// ---------------------------------------------------------------------------

template <class K>
struct DimensionTheory {
    std::vector<Lattice1<K>> domain;
    std::vector<long long> values;
};

template <class K>
DimensionTheory<K> canonical_dimension_theory(const std::vector<Lattice1<K>>& domain,
                                              const Lattice1<K>& L0) {
    DimensionTheory<K> d{domain, {}};
    for (const auto& L : domain) d.values.push_back(rel_dim(L, L0));
    return d;
}

template <class K>
bool dimension_theory_valid(const DimensionTheory<K>& d) {
    for (std::size_t i = 0; i < d.domain.size(); ++i)
        for (std::size_t j = 0; j < d.domain.size(); ++j) {
            if (i == j) continue;
            if (!lattice_contains(d.domain[j], d.domain[i])) continue;
            if (d.values[j] - d.values[i] != quotient_dim(d.domain[i], d.domain[j])) return false;
        }
    return true;
}

/// The Z-torsor structure: two valid theories on a nesting-connected domain
/// differ by a constant; returns it.
template <class K>
long long dim_theory_difference(const DimensionTheory<K>& a, const DimensionTheory<K>& b) {
    if (a.domain.size() != b.domain.size() || a.domain.empty())
        throw std::invalid_argument("dim_theory_difference: domain mismatch");
    for (std::size_t i = 0; i < a.domain.size(); ++i)
        if (!(a.domain[i] == b.domain[i]))
            throw std::invalid_argument("dim_theory_difference: domain mismatch");
    // connectivity under nesting
    std::size_t n = a.domain.size();
    std::vector<std::size_t> comp(n);
    for (std::size_t i = 0; i < n; ++i) comp[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return comp[x] == x ? x : comp[x] = find(comp[x]);
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && lattice_contains(a.domain[j], a.domain[i])) comp[find(i)] = find(j);
    for (std::size_t i = 1; i < n; ++i)
        if (find(i) != find(0))
            throw std::invalid_argument("dim_theory_difference: domain not nesting-connected");
    long long diff = a.values[0] - b.values[0];
    for (std::size_t i = 1; i < n; ++i)
        if (a.values[i] - b.values[i] != diff)
            throw std::invalid_argument("dim_theory_difference: difference not constant");
    return diff;
}

}  // namespace tatekit
