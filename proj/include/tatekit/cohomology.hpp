#pragma once

// Group cochains with values in an abelian band (multiplicative k^* or
// additive Z), coboundary operators, and the cocycle identity checks used
// throughout the extension machinery.

#include "tatekit/fields.hpp"
#include "tatekit/groups.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace tatekit {

/// Multiplicative band: nonzero scalars of a field under multiplication.
template <class K>
struct MulBand {
    using value_t = K;
    FieldCtx<K> F;
    explicit MulBand(FieldCtx<K> f) : F(std::move(f)) {}
    K id() const { return F.one(); }
    K op(const K& a, const K& b) const { return a * b; }
    K inv(const K& a) const { return a.inv(); }
    bool is_id(const K& a) const { return a == F.one(); }
    std::string name() const { return F.name() + "^*"; }
};

/// Additive band Z.
struct AddBandZ {
    using value_t = long long;
    long long id() const { return 0; }
    long long op(long long a, long long b) const { return a + b; }
    long long inv(long long a) const { return -a; }
    bool is_id(long long a) const { return a == 0; }
    std::string name() const { return "Z"; }
};

template <class Band>
struct Cochain2 {
    using V = typename Band::value_t;
    std::size_t n = 0;
    std::vector<V> v;  // v[g*n + h]

    Cochain2() = default;
    Cochain2(std::size_t order, const V& fill) : n(order), v(order * order, fill) {}
    V& at(std::size_t g, std::size_t h) { return v[g * n + h]; }
    const V& at(std::size_t g, std::size_t h) const { return v[g * n + h]; }
};

template <class Band>
struct Cochain3 {
    using V = typename Band::value_t;
    std::size_t n = 0;
    std::vector<V> v;

    Cochain3() = default;
    Cochain3(std::size_t order, const V& fill) : n(order), v(order * order * order, fill) {}
    V& at(std::size_t g, std::size_t h, std::size_t k) { return v[(g * n + h) * n + k]; }
    const V& at(std::size_t g, std::size_t h, std::size_t k) const {
        return v[(g * n + h) * n + k];
    }
};

/// dλ(g,h) = λ(g)·λ(h)/λ(gh) for a 1-cochain λ.
template <class Band>
Cochain2<Band> coboundary1(const FiniteGroup& G, const std::vector<typename Band::value_t>& lam,
                           const Band& B) {
    Cochain2<Band> c(G.order(), B.id());
    for (std::size_t g = 0; g < G.order(); ++g)
        for (std::size_t h = 0; h < G.order(); ++h)
            c.at(g, h) = B.op(B.op(lam[g], lam[h]), B.inv(lam[G.mul(g, h)]));
    return c;
}

/// dβ(g,h,k) = β(h,k)·β(g,hk)/(β(gh,k)·β(g,h)) for a 2-cochain β.
template <class Band>
Cochain3<Band> coboundary2(const FiniteGroup& G, const Cochain2<Band>& beta, const Band& B) {
    Cochain3<Band> c(G.order(), B.id());
    for (std::size_t g = 0; g < G.order(); ++g)
        for (std::size_t h = 0; h < G.order(); ++h)
            for (std::size_t k = 0; k < G.order(); ++k) {
                auto num = B.op(beta.at(h, k), beta.at(g, G.mul(h, k)));
                auto den = B.op(beta.at(G.mul(g, h), k), beta.at(g, h));
                c.at(g, h, k) = B.op(num, B.inv(den));
            }
    return c;
}

/// First violated triple of the 2-cocycle identity, or nullopt.
template <class Band>
std::optional<std::array<std::size_t, 3>> find_2cocycle_violation(const FiniteGroup& G,
                                                                  const Cochain2<Band>& c,
                                                                  const Band& B) {
    for (std::size_t g = 0; g < G.order(); ++g)
        for (std::size_t h = 0; h < G.order(); ++h)
            for (std::size_t k = 0; k < G.order(); ++k) {
                auto lhs = B.op(c.at(g, h), c.at(G.mul(g, h), k));
                auto rhs = B.op(c.at(g, G.mul(h, k)), c.at(h, k));
                if (!(lhs == rhs)) return std::array<std::size_t, 3>{g, h, k};
            }
    return std::nullopt;
}

/// First violated quadruple of the 3-cocycle identity
/// θ(h,k,l)·θ(g,hk,l)·θ(g,h,k) = θ(gh,k,l)·θ(g,h,kl), or nullopt.
template <class Band>
std::optional<std::array<std::size_t, 4>> find_3cocycle_violation(const FiniteGroup& G,
                                                                  const Cochain3<Band>& t,
                                                                  const Band& B) {
    for (std::size_t g = 0; g < G.order(); ++g)
        for (std::size_t h = 0; h < G.order(); ++h)
            for (std::size_t k = 0; k < G.order(); ++k)
                for (std::size_t l = 0; l < G.order(); ++l) {
                    auto lhs = B.op(B.op(t.at(h, k, l), t.at(g, G.mul(h, k), l)), t.at(g, h, k));
                    auto rhs = B.op(t.at(G.mul(g, h), k, l), t.at(g, h, G.mul(k, l)));
                    if (!(lhs == rhs)) return std::array<std::size_t, 4>{g, h, k, l};
                }
    return std::nullopt;
}

/// Generic (callable-based) 2-cocycle identity check over an element pool.
/// `mul` must produce honest products; elements need not stay in the pool.
template <class Elem, class Val, class Mul, class Coc, class Op, class Eq>
std::optional<std::array<std::size_t, 3>> find_2cocycle_violation_pool(
    const std::vector<Elem>& pool, Mul mul, Coc c, Op op, Eq eq) {
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = 0; j < pool.size(); ++j)
            for (std::size_t k = 0; k < pool.size(); ++k) {
                Val lhs = op(c(pool[i], pool[j]), c(mul(pool[i], pool[j]), pool[k]));
                Val rhs = op(c(pool[i], mul(pool[j], pool[k])), c(pool[j], pool[k]));
                if (!eq(lhs, rhs)) return std::array<std::size_t, 3>{i, j, k};
            }
    return std::nullopt;
}

}  // namespace tatekit
