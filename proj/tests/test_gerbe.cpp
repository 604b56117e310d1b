#include <catch2/catch_amalgamated.hpp>

#include <tatekit/gerbe.hpp>

#include "oracles.hpp"

#include <random>

using namespace tatekit;

namespace {

/// Action on a one-object gerbe whose tau is a pulled-back 2-cochain.
GerbeAction<Fp> constant_tau_action(const FiniteGroup& G, const FieldCtx<Fp>& F,
                                    const Cochain2<MulBand<Fp>>& r) {
    CoordGerbe<Fp> C(1, F);
    auto a = GerbeAction<Fp>::trivial(G, C);
    for (std::size_t g = 0; g < G.order(); ++g)
        for (std::size_t h = 0; h < G.order(); ++h) a.tau[g * G.order() + h][0] = r.at(g, h);
    return a;
}

/// The bilinear Klein-four cocycle r(a^i b^j, a^k b^l) = zeta^{j k}.
Cochain2<MulBand<Fp>> klein_bilinear_cocycle(const FiniteGroup& K4, const FieldCtx<Fp>& F) {
    Cochain2<MulBand<Fp>> r(K4.order(), F.one());
    Fp zeta = -F.one();
    auto bits = [](std::size_t x) { return std::pair<int, int>{int(x & 1), int(x >> 1)}; };
    for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t y = 0; y < 4; ++y) {
            auto [x1, x2] = bits(x);
            auto [y1, y2] = bits(y);
            (void)x1;
            if ((x2 * y1) % 2 == 1) r.at(x, y) = zeta;
        }
    return r;
}

/// A scrambled but valid action: random sigma conjugation and a coboundary
/// pattern on f, built so that all functoriality constraints hold.
GerbeAction<Fp> scrambled_action(const FiniteGroup& G, std::size_t objects,
                                 const FieldCtx<Fp>& F, std::mt19937_64& r) {
    CoordGerbe<Fp> C(objects, F);
    auto a = GerbeAction<Fp>::trivial(G, C);
    // random object permutation per non-identity g (sigma must be functorial
    // up to iso; any map works since all objects are isomorphic, but keep
    // permutations so sigma_{gh} = sigma_g sigma_h can be arranged via a
    // homomorphism to S_objects — use the trivial homomorphism except for an
    // involution swapping two objects for elements of even order)
    // Hom scales from potentials: f_g(x,y) = u_g(x)/u_g(y)
    std::vector<std::vector<Fp>> u(G.order(), std::vector<Fp>(objects, F.one()));
    for (std::size_t g = 1; g < G.order(); ++g)
        for (std::size_t x = 0; x < objects; ++x) u[g][x] = oracles::random_fp(r, F, true);
    for (std::size_t g = 0; g < G.order(); ++g)
        for (std::size_t x = 0; x < objects; ++x)
            for (std::size_t y = 0; y < objects; ++y) a.f[g][x][y] = u[g][x] / u[g][y];
    // tau forced by naturality: with sigma = id and f from potentials,
    // tau_{g,h}(x) = u_{gh}(x)/(u_g(x)·u_h(x)) times any group 2-cocycle
    for (std::size_t g = 0; g < G.order(); ++g)
        for (std::size_t h = 0; h < G.order(); ++h)
            for (std::size_t x = 0; x < objects; ++x)
                a.tau[g * G.order() + h][x] = u[G.mul(g, h)][x] / (u[g][x] * u[h][x]);
    return a;
}

}  // namespace

TEST_CASE("trivial action verifies; corrupted tau is located") {
    auto G = FiniteGroup::cyclic(4);
    FieldCtx<Fp> F(5);
    CoordGerbe<Fp> C(3, F);
    auto a = GerbeAction<Fp>::trivial(G, C);
    CHECK(verify_action(a).ok());

    a.tau[1 * G.order() + 2][1] = F.from_int(2);
    auto rep = verify_action(a);
    CHECK_FALSE(rep.ok());
    REQUIRE(rep.first_failure() != nullptr);
}

TEST_CASE("tau multiplied by a pulled-back 2-cocycle still verifies") {
    auto K4 = FiniteGroup::klein_four();
    FieldCtx<Fp> F(5);
    MulBand<Fp> band(F);
    auto r = klein_bilinear_cocycle(K4, F);
    REQUIRE_FALSE(find_2cocycle_violation(K4, r, band).has_value());
    auto a = constant_tau_action(K4, F, r);
    CHECK(verify_action(a).ok());
}

TEST_CASE("scrambled actions with potentials verify") {
    auto G = FiniteGroup::cyclic(3);
    FieldCtx<Fp> F(7);
    auto rng = oracles::rng(2024);
    for (int it = 0; it < 10; ++it) {
        auto a = scrambled_action(G, 3, F, rng);
        CHECK(verify_action(a).ok());
    }
}

TEST_CASE("central extension of the trivial action is the direct product") {
    auto G = FiniteGroup::cyclic(4);
    FieldCtx<Fp> F(5);
    CoordGerbe<Fp> C(2, F);
    auto ext = central_extension(GerbeAction<Fp>::trivial(G, C), 0);
    for (std::size_t g = 0; g < 4; ++g)
        for (std::size_t h = 0; h < 4; ++h) CHECK(ext.lambda.at(g, h) == F.one());
    CHECK(verify_extension_group<Fp>(ext).ok());
}

TEST_CASE("Klein-four action gives a nontrivial class detected by the commutator") {
    auto K4 = FiniteGroup::klein_four();
    FieldCtx<Fp> F(5);
    auto a = constant_tau_action(K4, F, klein_bilinear_cocycle(K4, F));
    REQUIRE(verify_action(a).ok());
    auto ext = central_extension(a, 0);
    CHECK(verify_extension_group<Fp>(ext).ok());
    CHECK(ext.commutator(1, 2) == -F.one());

    // against the exhaustive H^2 oracle: not cohomologous to the trivial class
    CHECK_FALSE(oracles::cohomologous_exhaustive(K4, ext.lambda, F));
    MultiplicativeTorsor<MulBand<Fp>> trivial(K4, MulBand<Fp>(F));
    CHECK(class_compare<Fp>(ext, trivial) == ClassCompareResult::NotCohomologous);
}

TEST_CASE("equivariant basepoint splits the extension") {
    // sigma fixes the basepoint and all scalars at it are 1: c ≡ 1
    auto G = FiniteGroup::cyclic(3);
    FieldCtx<Fp> F(7);
    CoordGerbe<Fp> C(2, F);
    auto a = GerbeAction<Fp>::trivial(G, C);
    auto ext = central_extension(a, 1);
    MultiplicativeTorsor<MulBand<Fp>> trivial(G, MulBand<Fp>(F));
    CHECK(class_compare<Fp>(ext, trivial) == ClassCompareResult::Cohomologous);
}

TEST_CASE("class_compare: c vs c·dλ is cohomologous") {
    auto G = FiniteGroup::klein_four();
    FieldCtx<Fp> F(5);
    MulBand<Fp> band(F);
    auto rng = oracles::rng(99);
    auto base = klein_bilinear_cocycle(G, F);
    MultiplicativeTorsor<MulBand<Fp>> c1(G, band), c2(G, band);
    c1.lambda = base;
    for (int it = 0; it < 10; ++it) {
        std::vector<Fp> lam(G.order(), F.one());
        for (std::size_t g = 1; g < G.order(); ++g) lam[g] = oracles::random_fp(rng, F, true);
        auto d = coboundary1(G, lam, band);
        for (std::size_t g = 0; g < 4; ++g)
            for (std::size_t h = 0; h < 4; ++h) c2.lambda.at(g, h) = base.at(g, h) * d.at(g, h);
        CHECK(class_compare<Fp>(c1, c2) == ClassCompareResult::Cohomologous);
    }
}

TEST_CASE("class_compare agrees with exhaustive enumeration on random cochain pairs") {
    auto G = FiniteGroup::klein_four();
    FieldCtx<Fp> F(5);
    MulBand<Fp> band(F);
    auto rng = oracles::rng(314);
    int checked = 0;
    while (checked < 25) {
        // random normalized 2-cocycles: random cochain projected by testing;
        // build from a coboundary times an optional nontrivial class
        std::vector<Fp> lam(G.order(), F.one());
        for (std::size_t g = 1; g < G.order(); ++g) lam[g] = oracles::random_fp(rng, F, true);
        auto c1 = coboundary1(G, lam, band);
        bool twist = rng() % 2;
        if (twist) {
            auto k = klein_bilinear_cocycle(G, F);
            for (std::size_t g = 0; g < 4; ++g)
                for (std::size_t h = 0; h < 4; ++h) c1.at(g, h) *= k.at(g, h);
        }
        MultiplicativeTorsor<MulBand<Fp>> t1(G, band), t2(G, band);
        t1.lambda = c1;
        bool oracle = oracles::cohomologous_exhaustive(G, c1, F);
        auto mine = class_compare<Fp>(t1, t2);
        REQUIRE(mine != ClassCompareResult::Undecided);
        CHECK((mine == ClassCompareResult::Cohomologous) == oracle);
        ++checked;
    }
}

TEST_CASE("class_compare over Q uses invariants") {
    auto G = FiniteGroup::klein_four();
    FieldCtx<Rat> F;
    MulBand<Rat> band(F);
    MultiplicativeTorsor<MulBand<Rat>> c1(G, band), c2(G, band);
    // commutator-distinguishable pair: bilinear cocycle with value -1
    auto bits = [](std::size_t x) { return std::pair<int, int>{int(x & 1), int(x >> 1)}; };
    for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t y = 0; y < 4; ++y) {
            auto [x1, x2] = bits(x);
            auto [y1, y2] = bits(y);
            (void)x1;
            (void)y2;
            if ((x2 * y1) % 2 == 1) c1.lambda.at(x, y) = -F.one();
        }
    CHECK(class_compare<Rat>(c1, c2) == ClassCompareResult::NotCohomologous);
    CHECK(class_compare<Rat>(c1, c1) == ClassCompareResult::Cohomologous);
}
