#include <catch2/catch_amalgamated.hpp>

#include <tatekit/fields.hpp>

#include "oracles.hpp"

using namespace tatekit;

TEST_CASE("Fp arithmetic basics") {
    FieldCtx<Fp> F(7);
    Fp a = F.from_int(3), b = F.from_int(5);
    CHECK(a + b == F.from_int(1));
    CHECK(a * b == F.from_int(1));
    CHECK(a - b == F.from_int(-2));
    CHECK((a / b) * b == a);
    CHECK(F.from_int(-1) == F.from_int(6));
    CHECK_THROWS_AS(F.zero().inv(), std::domain_error);
}

TEST_CASE("Fp field axioms on random samples") {
    for (std::uint64_t p : {2ull, 5ull, 7ull}) {
        FieldCtx<Fp> F(p);
        auto r = oracles::rng(42);
        for (int it = 0; it < 200; ++it) {
            Fp a = oracles::random_fp(r, F), b = oracles::random_fp(r, F),
               c = oracles::random_fp(r, F);
            CHECK(a + b == b + a);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) CHECK(a * a.inv() == F.one());
        }
    }
}

TEST_CASE("Rat exact arithmetic") {
    FieldCtx<Rat> F;
    Rat a(1, 3), b(1, 6);
    CHECK(a + b == Rat(1, 2));
    CHECK(a * b == Rat(1, 18));
    CHECK(a / b == Rat(2, 1));
    CHECK((a - a).is_zero());
    auto r = oracles::rng(7);
    for (int it = 0; it < 200; ++it) {
        Rat x = oracles::random_rat(r), y = oracles::random_rat(r, true);
        CHECK((x / y) * y == x);
        CHECK(x + (-x) == F.zero());
    }
}

TEST_CASE("pow_scalar handles negative exponents") {
    FieldCtx<Fp> F(7);
    CHECK(pow_scalar(F.from_int(3), 0) == F.one());
    CHECK(pow_scalar(F.from_int(3), 2) == F.from_int(2));
    CHECK(pow_scalar(F.from_int(3), -1) == F.from_int(3).inv());
    CHECK(pow_scalar(Rat(2, 3), -2) == Rat(9, 4));
}

TEST_CASE("prime check guards the field context") {
    CHECK_THROWS_AS(FieldCtx<Fp>(6), std::invalid_argument);
    CHECK_NOTHROW(FieldCtx<Fp>(2));
}
