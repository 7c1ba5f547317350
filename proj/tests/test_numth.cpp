#include <catch2/catch_amalgamated.hpp>

#include "slnq/numth.hpp"

using namespace slnq;

TEST_CASE("prime power factorization") {
    auto q = PrimePowerQ::of(9);
    CHECK(q.p == 3);
    CHECK(q.f == 2);
    CHECK(PrimePowerQ::of(2).f == 1);
    CHECK(PrimePowerQ::of(8).p == 2);
    CHECK_THROWS_AS(PrimePowerQ::of(6), std::invalid_argument);
    CHECK_THROWS_AS(PrimePowerQ::of(1), std::invalid_argument);
    CHECK_THROWS_AS(PrimePowerQ::of(12), std::invalid_argument);
}

TEST_CASE("ell prime validation") {
    auto q = PrimePowerQ::of(9);
    CHECK(EllPrime::of(2, q).ell == 2);
    CHECK_THROWS_AS(EllPrime::of(3, q), std::invalid_argument);
    CHECK_THROWS_AS(EllPrime::of(4, q), std::invalid_argument);
    CHECK(EllPrime::characteristic_zero().char_zero());
}

TEST_CASE("ell-adic valuation and parts") {
    CHECK(ell_val(12, 2) == 2);
    CHECK(ell_val(7, 2) == 0);
    CHECK(ell_val(243, 3) == 5);
    CHECK_THROWS_AS(ell_val(0, 2), std::invalid_argument);

    CHECK(ell_part(24, 2) == 8);
    CHECK(ell_prime_part(24, 2) == 3);
    CHECK(ell_part(5, 3) == 1);
    CHECK(ell_part(9 - 1, 2) == 8);
    CHECK_THROWS_AS(ell_part(0, 2), std::invalid_argument);
}

TEST_CASE("part times prime part recomposes") {
    for (std::uint64_t m = 1; m <= 5000; ++m) {
        for (std::uint64_t ell : {2, 3, 5, 7}) {
            auto a = ell_part(m, ell);
            auto b = ell_prime_part(m, ell);
            REQUIRE(a * b == m);
            REQUIRE(std::gcd(b, ell) == 1);
        }
    }
}

TEST_CASE("characteristic zero sentinel") {
    auto zero = EllPrime::characteristic_zero();
    CHECK(ell_part(24, zero) == 1);
    CHECK(ell_prime_part(24, zero) == 24);
}

TEST_CASE("cyclotomic quotient ell-part examples") {
    auto r1 = lnt_check(5, 2, 2);
    CHECK(r1.actual == 4);
    CHECK(r1.predicted == 4);
    CHECK_FALSE(r1.exceptional);

    auto r2 = lnt_check(3, 2, 1);
    CHECK(r2.actual == 4);
    CHECK(r2.exceptional);

    auto r3 = lnt_check(7, 3, 1);
    CHECK(r3.actual == 3);
    CHECK(r3.predicted == 3);
    CHECK_FALSE(r3.exceptional);

    CHECK_THROWS_AS(lnt_check(8, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(lnt_check(3, 2, 7), capacity_error);
}

TEST_CASE("cyclotomic quotient ell-part over the full range") {
    for (std::uint64_t ell : {2, 3, 5, 7, 11, 13}) {
        for (std::uint64_t r = 2; r <= 200; ++r) {
            if ((r - 1) % ell != 0) continue;
            for (unsigned d = 1; ipow(ell, d) <= 64; ++d) {
                auto res = lnt_check(r, ell, d);
                if (!res.exceptional)
                    REQUIRE(res.actual == res.predicted);
            }
        }
    }
}
