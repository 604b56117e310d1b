#include <catch2/catch_amalgamated.hpp>

#include <tatekit/matrix.hpp>

#include "oracles.hpp"

using namespace tatekit;

namespace {

template <class K>
Matrix<K> random_matrix(std::mt19937_64& r, std::size_t n, std::size_t m, const FieldCtx<K>& F,
                        auto gen) {
    Matrix<K> a(n, m, F.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) a.at(i, j) = gen(r, F);
    return a;
}

}  // namespace

TEST_CASE("rref of identity and zero") {
    FieldCtx<Fp> F(5);
    auto [e, piv] = rref(Matrix<Fp>::identity(3, F));
    CHECK(e == Matrix<Fp>::identity(3, F));
    CHECK(piv == std::vector<std::size_t>{0, 1, 2});

    Matrix<Fp> z(2, 3, F.zero());
    auto [ez, pivz] = rref(z);
    CHECK(ez.rows() == 0);
    CHECK(pivz.empty());
}

TEST_CASE("rref is idempotent and canonical on random GF(7) matrices") {
    FieldCtx<Fp> F(7);
    auto r = oracles::rng(11);
    auto gen = [](std::mt19937_64& rr, const FieldCtx<Fp>& FF) { return oracles::random_fp(rr, FF); };
    for (int it = 0; it < 50; ++it) {
        auto m = random_matrix<Fp>(r, 5, 5, F, gen);
        auto [e1, p1] = rref(m);
        auto [e2, p2] = rref(e1);
        CHECK(e1 == e2);
        CHECK(p1 == p2);
    }
}

TEST_CASE("det: identity, diagonal, error path") {
    FieldCtx<Fp> F(7);
    CHECK(det(Matrix<Fp>::identity(4, F), F) == F.one());
    Matrix<Fp> d(2, 2, F.zero());
    d.at(0, 0) = F.from_int(2);
    d.at(1, 1) = F.from_int(3);
    CHECK(det(d, F) == F.from_int(6));
    Matrix<Fp> rect(2, 3, F.zero());
    CHECK_THROWS_AS(det(rect, F), std::invalid_argument);
}

TEST_CASE("det agrees with cofactor-expansion oracle over Q") {
    FieldCtx<Rat> F;
    auto r = oracles::rng(23);
    auto gen = [](std::mt19937_64& rr, const FieldCtx<Rat>&) { return oracles::random_rat(rr); };
    for (int it = 0; it < 20; ++it) {
        auto m = random_matrix<Rat>(r, 4, 4, F, gen);
        CHECK(det(m, F) == oracles::cofactor_det(m, F));
    }
}

TEST_CASE("det is multiplicative (200 random pairs per field)") {
    auto rQ = oracles::rng(31);
    FieldCtx<Rat> FQ;
    auto genQ = [](std::mt19937_64& rr, const FieldCtx<Rat>&) { return oracles::random_rat(rr); };
    for (int it = 0; it < 200; ++it) {
        auto a = random_matrix<Rat>(rQ, 3, 3, FQ, genQ);
        auto b = random_matrix<Rat>(rQ, 3, 3, FQ, genQ);
        CHECK(det(a * b, FQ) == det(a, FQ) * det(b, FQ));
    }
    for (std::uint64_t p : {2ull, 5ull, 7ull}) {
        FieldCtx<Fp> F(p);
        auto r = oracles::rng(100 + p);
        auto gen = [](std::mt19937_64& rr, const FieldCtx<Fp>& FF) {
            return oracles::random_fp(rr, FF);
        };
        for (int it = 0; it < 200; ++it) {
            auto a = random_matrix<Fp>(r, 3, 3, F, gen);
            auto b = random_matrix<Fp>(r, 3, 3, F, gen);
            CHECK(det(a * b, F) == det(a, F) * det(b, F));
        }
    }
}

TEST_CASE("express_in_rows solves and detects inconsistency") {
    FieldCtx<Fp> F(5);
    std::vector<std::vector<Fp>> rows = {{F.one(), F.zero(), F.one()},
                                         {F.zero(), F.one(), F.one()}};
    std::vector<Fp> v = {F.from_int(2), F.from_int(3), F.from_int(0)};
    auto sol = express_in_rows(rows, v, F);
    REQUIRE(sol.has_value());
    std::vector<Fp> acc(3, F.zero());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < 3; ++j) acc[j] += (*sol)[i] * rows[i][j];
    CHECK(acc == v);
    std::vector<Fp> w = {F.zero(), F.zero(), F.one()};
    CHECK_FALSE(express_in_rows(rows, w, F).has_value());
}
