#pragma once

// Coordinatized G_m-gerbes over a point and group actions on them. A gerbe
// is stored pre-trivialized: a finite object set whose Hom-torsors carry
// scalar coordinates with untwisted composition. All the content of an
// action lives in the object maps, the Hom scale factors and the
// transformation scalars; the central-extension cocycle falls out of those.

#include "tatekit/cohomology.hpp"
#include "tatekit/fields.hpp"
#include "tatekit/groups.hpp"
#include "tatekit/report.hpp"

#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <vector>

namespace tatekit {

template <class K>
struct CoordGerbe {
    std::size_t n_objects = 1;
    FieldCtx<K> F;
    CoordGerbe(std::size_t n, FieldCtx<K> f) : n_objects(n), F(std::move(f)) {
        if (n == 0) throw std::invalid_argument("CoordGerbe: needs at least one object");
    }
};

/// Action data: per g an object map sigma_g and Hom scale f_g, per (g,h)
/// transformation scalars tau_{g,h} with components over the object set.
template <class K>
struct GerbeAction {
    FiniteGroup G;
    CoordGerbe<K> gerbe;
    // sigma[g][x] = image object of x under F_g
    std::vector<std::vector<std::size_t>> sigma;
    // f[g] is an S×S grid; f_g(x,y) scales Hom(x,y) -> Hom(sigma x, sigma y)
    std::vector<std::vector<std::vector<K>>> f;
    // tau[g*|G|+h][x] = coordinate of tau_{g,h} at object x
    std::vector<std::vector<K>> tau;

    const K& fval(std::size_t g, std::size_t x, std::size_t y) const { return f[g][x][y]; }
    const K& tval(std::size_t g, std::size_t h, std::size_t x) const {
        return tau[g * G.order() + h][x];
    }

    static GerbeAction trivial(const FiniteGroup& G, const CoordGerbe<K>& C) {
        GerbeAction a{G, C, {}, {}, {}};
        std::size_t n = G.order(), S = C.n_objects;
        a.sigma.assign(n, std::vector<std::size_t>(S));
        for (auto& s : a.sigma) std::iota(s.begin(), s.end(), 0);
        a.f.assign(n, std::vector<std::vector<K>>(S, std::vector<K>(S, C.F.one())));
        a.tau.assign(n * n, std::vector<K>(S, C.F.one()));
        return a;
    }
};

template <class K>
Report verify_action(const GerbeAction<K>& a) {
    Report rep;
    rep.task = "verify-action";
    const FiniteGroup& G = a.G;
    std::size_t n = G.order(), S = a.gerbe.n_objects;
    const FieldCtx<K>& F = a.gerbe.F;
    auto w = [](auto... parts) {
        std::ostringstream os;
        ((os << parts << ' '), ...);
        return os.str();
    };

    {  // unit normalizations: F_1 = Id, tau_{1,g} = tau_{g,1} = Id
        bool ok = true;
        std::string witness;
        for (std::size_t x = 0; x < S && ok; ++x)
            if (a.sigma[G.id()][x] != x) { ok = false; witness = w("sigma_1 moves object", x); }
        for (std::size_t x = 0; x < S && ok; ++x)
            for (std::size_t y = 0; y < S && ok; ++y)
                if (!(a.fval(G.id(), x, y) == F.one())) { ok = false; witness = w("f_1 at", x, y); }
        for (std::size_t g = 0; g < n && ok; ++g)
            for (std::size_t x = 0; x < S && ok; ++x) {
                if (!(a.tval(G.id(), g, x) == F.one())) { ok = false; witness = w("tau_{1,g} g=", g, "x=", x); }
                if (!(a.tval(g, G.id(), x) == F.one())) { ok = false; witness = w("tau_{g,1} g=", g, "x=", x); }
            }
        rep.add("unit-normalization", ok, witness);
    }

    {  // functoriality of the Hom scales: f_g(x,z) = f_g(x,y)·f_g(y,z), f_g(x,x)=1
        bool ok = true;
        std::string witness;
        for (std::size_t g = 0; g < n && ok; ++g) {
            for (std::size_t x = 0; x < S && ok; ++x)
                if (!(a.fval(g, x, x) == F.one())) { ok = false; witness = w("f self-scale g=", g, "x=", x); }
            for (std::size_t x = 0; x < S && ok; ++x)
                for (std::size_t y = 0; y < S && ok; ++y)
                    for (std::size_t z = 0; z < S && ok; ++z)
                        if (!(a.fval(g, x, z) == a.fval(g, x, y) * a.fval(g, y, z))) {
                            ok = false;
                            witness = w("f compat g=", g, "(", x, y, z, ")");
                        }
        }
        rep.add("hom-scale-compatibility", ok, witness);
    }

    {  // naturality of tau
        bool ok = true;
        std::string witness;
        for (std::size_t g = 0; g < n && ok; ++g)
            for (std::size_t h = 0; h < n && ok; ++h)
                for (std::size_t x = 0; x < S && ok; ++x)
                    for (std::size_t y = 0; y < S && ok; ++y) {
                        K lhs = a.tval(g, h, y) * a.fval(G.mul(g, h), x, y);
                        K rhs = a.fval(g, a.sigma[h][x], a.sigma[h][y]) * a.fval(h, x, y) *
                                a.tval(g, h, x);
                        if (!(lhs == rhs)) { ok = false; witness = w("naturality (", g, h, ") x=", x, "y=", y); }
                    }
        rep.add("tau-naturality", ok, witness);
    }

    {  // the action square, pointwise on objects over all triples
        bool ok = true;
        std::string witness;
        for (std::size_t g1 = 0; g1 < n && ok; ++g1)
            for (std::size_t g2 = 0; g2 < n && ok; ++g2)
                for (std::size_t g3 = 0; g3 < n && ok; ++g3)
                    for (std::size_t x = 0; x < S && ok; ++x) {
                        std::size_t s23x = a.sigma[G.mul(g2, g3)][x];
                        std::size_t s3x = a.sigma[g3][x];
                        std::size_t s2s3x = a.sigma[g2][s3x];
                        K lhs = a.tval(g1, G.mul(g2, g3), x) * a.fval(g1, s23x, s2s3x) *
                                a.tval(g2, g3, x);
                        K rhs = a.tval(G.mul(g1, g2), g3, x) * a.tval(g1, g2, s3x);
                        if (!(lhs == rhs)) {
                            ok = false;
                            witness = w("square (", g1, g2, g3, ") at object", x);
                        }
                    }
        rep.add("action-square", ok, witness);
    }
    return rep;
}

template <class K>
struct ExtensionElement {
    std::size_t g;
    K phi;
};

/// Multiplicative torsor over a finite group: the cochain presentation of a
/// central extension (a trivialized line over G with multiplication data).
template <class Band>
struct MultiplicativeTorsor {
    using V = typename Band::value_t;
    FiniteGroup G;
    Band band;
    Cochain2<Band> lambda;

    MultiplicativeTorsor(FiniteGroup g, Band b)
        : G(std::move(g)), band(std::move(b)), lambda(G.order(), band.id()) {}

    V commutator(std::size_t g, std::size_t h) const {
        if (!G.commute(g, h)) throw std::invalid_argument("commutator: elements do not commute");
        return band.op(lambda.at(g, h), band.inv(lambda.at(h, g)));
    }

    Report verify_cocycle() const {
        Report rep;
        rep.task = "cocycle-identity";
        auto bad = find_2cocycle_violation(G, lambda, band);
        std::string witness;
        if (bad) {
            std::ostringstream os;
            os << "triple (" << (*bad)[0] << "," << (*bad)[1] << "," << (*bad)[2] << ")";
            witness = os.str();
        }
        rep.add("2-cocycle-identity", !bad, witness);
        bool norm = true;
        for (std::size_t g = 0; g < G.order() && norm; ++g)
            norm = band.is_id(lambda.at(G.id(), g)) && band.is_id(lambda.at(g, G.id()));
        rep.add("normalized", norm);
        return rep;
    }
};

/// Thm-style central extension from an action and a basepoint object:
/// (g1,phi1)(g2,phi2) = (g1 g2, phi1·phi2·c(g1,g2)) with
/// c(g1,g2) = f_{g1}(sigma_{g2}A, A)·tau_{g1,g2}(A).
template <class K>
MultiplicativeTorsor<MulBand<K>> central_extension(const GerbeAction<K>& a, std::size_t basepoint) {
    if (basepoint >= a.gerbe.n_objects)
        throw std::invalid_argument("central_extension: basepoint out of range");
    MulBand<K> band(a.gerbe.F);
    MultiplicativeTorsor<MulBand<K>> ext(a.G, band);
    for (std::size_t g = 0; g < a.G.order(); ++g)
        for (std::size_t h = 0; h < a.G.order(); ++h)
            ext.lambda.at(g, h) =
                a.fval(g, a.sigma[h][basepoint], basepoint) * a.tval(g, h, basepoint);
    return ext;
}

/// Full group-axiom check for the extension product on all pool triples.
template <class K>
Report verify_extension_group(const MultiplicativeTorsor<MulBand<K>>& ext) {
    Report rep = ext.verify_cocycle();
    rep.task = "extension-group-axioms";
    const FieldCtx<K>& F = ext.band.F;
    const FiniteGroup& G = ext.G;
    // identity and inverses in coordinates
    bool inv_ok = true;
    std::string witness;
    for (std::size_t g = 0; g < G.order(); ++g) {
        // (g,1)(g^{-1},x) = (1, x·c(g,g^{-1})) — solvable for x exactly
        K c = ext.lambda.at(g, G.inv(g));
        if (c.is_zero()) { inv_ok = false; witness = "zero cocycle value"; break; }
    }
    rep.add("inverses-exist", inv_ok, witness);
    rep.values["group"] = G.name();
    rep.values["field"] = F.name();
    return rep;
}

enum class ClassCompareResult { Cohomologous, NotCohomologous, Undecided };

inline const char* to_string(ClassCompareResult r) {
    switch (r) {
        case ClassCompareResult::Cohomologous: return "cohomologous";
        case ClassCompareResult::NotCohomologous: return "not-cohomologous";
        default: return "undecided";
    }
}

namespace detail {

/// Is x an m-th power in GF(p)^*?
inline bool is_mth_power(const Fp& x, std::size_t m) {
    std::uint64_t p = x.modulus();
    std::uint64_t q = p - 1;
    std::uint64_t g = std::gcd<std::uint64_t>(m, q);
    return pow_scalar(x, static_cast<long long>(q / g)) == Fp::one(p);
}

/// Is x an m-th power in Q^*? Exact via factorization; bails out (returns
/// nullopt) when the numerator/denominator are too large to factor quickly.
inline std::optional<bool> is_mth_power(const Rat& x, std::size_t m) {
    if (m == 1) return true;
    BigRational v = x.value();
    BigInt num = boost::multiprecision::numerator(v);
    BigInt den = boost::multiprecision::denominator(v);
    if (num < 0) {
        if (m % 2 == 0) return false;
        num = -num;
    }
    auto exponents_divisible = [&](BigInt n) -> std::optional<bool> {
        if (n > BigInt(1) << 62) return std::nullopt;
        for (BigInt d = 2; d * d <= n; ++d) {
            std::size_t e = 0;
            while (n % d == 0) { n /= d; ++e; }
            if (e % m != 0) return false;
        }
        if (n > 1 && 1 % m != 0) return false;  // leftover prime has exponent 1
        return true;
    };
    auto a = exponents_divisible(num);
    if (!a) return std::nullopt;
    if (!*a) return false;
    auto b = exponents_divisible(den);
    if (!b) return std::nullopt;
    return *b;
}

template <class K>
bool try_lambda_extension(const FiniteGroup& G, const Cochain2<MulBand<K>>& r,
                          const std::vector<K>& gen_values, const FieldCtx<K>& F) {
    // extend lambda from generators via lambda(gh) = lambda(g)·lambda(h)/r(g,h)
    std::size_t n = G.order();
    std::vector<std::optional<K>> lam(n);
    lam[G.id()] = F.one();
    const auto& gens = G.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) lam[gens[i]] = gen_values[i];
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t g = 0; g < n; ++g) {
            if (!lam[g]) continue;
            for (std::size_t h = 0; h < n; ++h) {
                if (!lam[h]) continue;
                std::size_t gh = G.mul(g, h);
                K value = (*lam[g]) * (*lam[h]) / r.at(g, h);
                if (!lam[gh]) { lam[gh] = value; grew = true; }
            }
        }
    }
    for (std::size_t g = 0; g < n; ++g)
        if (!lam[g]) return false;  // generators did not generate (cannot happen)
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h)
            if (!((*lam[g]) * (*lam[h]) / (*lam[G.mul(g, h)]) == r.at(g, h))) return false;
    return true;
}

}  // namespace detail

/// Decide whether two multiplicative torsors over the same finite group are
/// cohomologous. Finite fields are decided exactly by enumerating candidate
/// coboundaries on a generating set; over Q the decision falls back to
/// coboundary-invariant comparisons and may report Undecided.
template <class K>
ClassCompareResult class_compare(const MultiplicativeTorsor<MulBand<K>>& c1,
                                 const MultiplicativeTorsor<MulBand<K>>& c2,
                                 std::string* witness = nullptr);

template <>
inline ClassCompareResult class_compare<Fp>(const MultiplicativeTorsor<MulBand<Fp>>& c1,
                                            const MultiplicativeTorsor<MulBand<Fp>>& c2,
                                            std::string* witness) {
    const FiniteGroup& G = c1.G;
    if (G.order() != c2.G.order()) throw std::invalid_argument("class_compare: group mismatch");
    const FieldCtx<Fp>& F = c1.band.F;
    Cochain2<MulBand<Fp>> r(G.order(), F.one());
    for (std::size_t g = 0; g < G.order(); ++g)
        for (std::size_t h = 0; h < G.order(); ++h)
            r.at(g, h) = c1.lambda.at(g, h) / c2.lambda.at(g, h);

    const auto& gens = G.generators();
    std::size_t q = F.p - 1;
    double combos = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) combos *= static_cast<double>(q);
    if (combos > 2e7) {
        if (witness) *witness = "generator search space too large";
        return ClassCompareResult::Undecided;
    }
    std::vector<Fp> vals(gens.size(), F.one());
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == gens.size()) return detail::try_lambda_extension(G, r, vals, F);
        for (std::uint64_t x = 1; x < F.p; ++x) {
            vals[i] = Fp(x, F.p);
            if (rec(i + 1)) return true;
        }
        return false;
    };
    bool found = rec(0);
    if (witness && !found) *witness = "no coboundary over generator assignments";
    return found ? ClassCompareResult::Cohomologous : ClassCompareResult::NotCohomologous;
}

template <>
inline ClassCompareResult class_compare<Rat>(const MultiplicativeTorsor<MulBand<Rat>>& c1,
                                             const MultiplicativeTorsor<MulBand<Rat>>& c2,
                                             std::string* witness) {
    const FiniteGroup& G = c1.G;
    if (G.order() != c2.G.order()) throw std::invalid_argument("class_compare: group mismatch");
    bool equal = true;
    for (std::size_t g = 0; g < G.order() && equal; ++g)
        for (std::size_t h = 0; h < G.order() && equal; ++h)
            equal = c1.lambda.at(g, h) == c2.lambda.at(g, h);
    if (equal) return ClassCompareResult::Cohomologous;

    // commutator pairing is a coboundary invariant
    for (std::size_t g = 0; g < G.order(); ++g)
        for (std::size_t h = 0; h < G.order(); ++h) {
            if (!G.commute(g, h)) continue;
            if (!(c1.commutator(g, h) == c2.commutator(g, h))) {
                if (witness) {
                    std::ostringstream os;
                    os << "commutator differs at (" << g << "," << h << ")";
                    *witness = os.str();
                }
                return ClassCompareResult::NotCohomologous;
            }
        }
    // restriction to cyclic subgroups: the norm modulo m-th powers
    for (std::size_t g = 1; g < G.order(); ++g) {
        std::size_t m = G.element_order(g);
        Rat n1 = Rat::one(), n2 = Rat::one();
        std::size_t x = G.id();
        for (std::size_t i = 0; i < m; ++i) {
            n1 *= c1.lambda.at(g, x);
            n2 *= c2.lambda.at(g, x);
            x = G.mul(g, x);
        }
        auto pw = detail::is_mth_power(n1 / n2, m);
        if (pw && !*pw) {
            if (witness) {
                std::ostringstream os;
                os << "cyclic norm at g=" << g << " not an " << m << "-th power";
                *witness = os.str();
            }
            return ClassCompareResult::NotCohomologous;
        }
    }
    if (witness) *witness = "invariants agree; infinite field not enumerable";
    return ClassCompareResult::Undecided;
}

}  // namespace tatekit
