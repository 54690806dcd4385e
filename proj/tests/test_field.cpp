#include <random>

#include "doctest.h"
#include "ogc/field.hpp"

using namespace ogc;

TEST_CASE("prime field and basic construction") {
    auto f2 = Field::make(2, 1);
    CHECK(f2->q() == 2);
    CHECK(f2->add(1, 1) == 0);
    CHECK(f2->mul(1, 1) == 1);

    CHECK_THROWS_WITH_AS(Field::make(6, 1), doctest::Contains("NonPrimeCharacteristic"), Error);
    CHECK_THROWS_AS(Field::make(2, 10), Error);  // 1024 > 512 without modulus
}

TEST_CASE("GF(4) modulus validation") {
    auto f4 = Field::make(2, 2, Field::poly{1, 1, 1});  // x^2+x+1
    CHECK(f4->q() == 4);
    // x^2+1 = (x+1)^2 in characteristic 2
    CHECK_THROWS_WITH_AS(Field::make(2, 2, Field::poly{1, 0, 1}),
                         doctest::Contains("ReducibleModulus"), Error);
}

TEST_CASE("default modulus table is pinned") {
    CHECK(Field::make(2, 2)->modulus() == Field::poly{1, 1, 1});        // x^2+x+1
    CHECK(Field::make(2, 3)->modulus() == Field::poly{1, 1, 0, 1});     // x^3+x+1
    CHECK(Field::make(2, 4)->modulus() == Field::poly{1, 1, 0, 0, 1});  // x^4+x+1
    CHECK(Field::make(3, 2)->modulus() == Field::poly{1, 0, 1});        // x^2+1
}

TEST_CASE("GF(4) multiplication reduces by the modulus") {
    auto f4 = Field::make(2, 2);
    CHECK(f4->mul(2, 2) == 3);  // x*x = x+1
    CHECK(f4->mul(2, 3) == 1);  // x*(x+1) = x^2+x = 1
}

TEST_CASE("characteristic-2 addition is involutive") {
    for (auto f : {Field::make(2, 1), Field::make(2, 3), Field::make(2, 4)})
        for (std::uint32_t a = 0; a < f->q(); ++a)
            CHECK(f->add(static_cast<scalar_t>(a), static_cast<scalar_t>(a)) == 0);
}

TEST_CASE("GF(8): x^7 = 1, against a repeated-squaring oracle") {
    auto f8 = Field::make(2, 3);
    const scalar_t x = 2;
    // oracle: x^7 = x^4 * x^2 * x via explicit squarings
    const scalar_t x2 = f8->mul(x, x);
    const scalar_t x4 = f8->mul(x2, x2);
    const scalar_t oracle = f8->mul(f8->mul(x4, x2), x);
    CHECK(oracle == 1);
    CHECK(f8->pow(x, 7) == oracle);
    // multiplicative order of every nonzero element divides q-1
    for (scalar_t a = 1; a < 8; ++a) CHECK(f8->pow(a, 7) == 1);
}

TEST_CASE("square roots in characteristic 2") {
    auto f2 = Field::make(2, 1);
    CHECK(f2->sqrt(1) == 1);

    auto f4 = Field::make(2, 2);
    CHECK(f4->sqrt(2) == 3);  // (x+1)^2 = x^2+1 = x

    auto f8 = Field::make(2, 3);
    for (std::uint32_t a = 0; a < 8; ++a) {
        const scalar_t r = f8->sqrt(static_cast<scalar_t>(a));
        CHECK(f8->mul(r, r) == a);
    }

    CHECK_THROWS_WITH_AS(Field::make(3, 1)->sqrt(1), doctest::Contains("WrongCharacteristic"),
                         Error);
}

TEST_CASE("Frobenius is a bijection in characteristic 2 and sqrt inverts it") {
    for (auto f : {Field::make(2, 2), Field::make(2, 3), Field::make(2, 4)}) {
        std::vector<bool> seen(f->q(), false);
        for (std::uint32_t a = 0; a < f->q(); ++a) {
            const scalar_t sq = f->mul(static_cast<scalar_t>(a), static_cast<scalar_t>(a));
            CHECK(!seen[sq]);
            seen[sq] = true;
            CHECK(f->sqrt(sq) == a);
        }
    }
}

TEST_CASE("inverses, exhaustively, over a spread of field sizes") {
    for (auto [p, e] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {2u, 3u}, {3u, 2u},
                        {2u, 4u}, {5u, 2u}, {7u, 3u}, {2u, 8u}, {3u, 5u}}) {
        auto f = Field::make(p, e);
        for (std::uint32_t a = 1; a < f->q(); ++a)
            CHECK(f->mul(static_cast<scalar_t>(a), f->inv(static_cast<scalar_t>(a))) == 1);
        CHECK_THROWS_AS(f->inv(0), Error);
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(7);
    for (auto f : {Field::make(3, 2), Field::make(2, 4), Field::make(5, 2)}) {
        const std::uint32_t q = f->q();
        for (int trial = 0; trial < 200; ++trial) {
            const auto a = static_cast<scalar_t>(rng() % q);
            const auto b = static_cast<scalar_t>(rng() % q);
            const auto c = static_cast<scalar_t>(rng() % q);
            CHECK(f->add(a, b) == f->add(b, a));
            CHECK(f->mul(a, b) == f->mul(b, a));
            CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
            CHECK(f->sub(f->add(a, b), b) == a);
        }
    }
}

TEST_CASE("encoding round-trip") {
    for (auto f : {Field::make(3, 3), Field::make(2, 5)}) {
        for (std::uint32_t a = 0; a < f->q(); ++a)
            CHECK(f->from_digits(f->digits(static_cast<scalar_t>(a))) == a);
    }
}

TEST_CASE("user-supplied modulus beyond the default cap") {
    // GF(1024) = GF(2^10), x^10 + x^3 + 1 is irreducible
    Field::poly m(11, 0);
    m[0] = 1;
    m[3] = 1;
    m[10] = 1;
    auto f = Field::make(2, 10, m);
    CHECK(f->q() == 1024);
    CHECK(f->mul(f->inv(37), 37) == 1);
}
