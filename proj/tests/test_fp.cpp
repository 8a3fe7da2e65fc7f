#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kummerlab/fp.hpp"

using namespace kummerlab;

TEST_CASE("modulus validation") {
    CHECK_THROWS_AS(validate_odd_prime(2), std::invalid_argument);
    CHECK_THROWS_AS(validate_odd_prime(1), std::invalid_argument);
    CHECK_THROWS_AS(validate_odd_prime(9), std::invalid_argument);
    CHECK_THROWS_AS(validate_odd_prime(1'000'003), std::invalid_argument); // above desk bound
    CHECK_NOTHROW(validate_odd_prime(3));
    CHECK_NOTHROW(validate_odd_prime(10007));
    CHECK_NOTHROW(validate_odd_prime(999983));
}

TEST_CASE("inverse worked examples") {
    CHECK(inverse(Fp(3, 7)) == Fp(5, 7));
    CHECK(inverse(Fp(1, 101)) == Fp(1, 101));
    CHECK(inverse(Fp(6, 11)) == Fp(2, 11));
    CHECK_THROWS_AS(inverse(Fp(0, 7)), std::invalid_argument);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(12345);
    for (uint32_t p : {3u, 5u, 7u, 101u, 10007u}) {
        for (int iter = 0; iter < 200; ++iter) {
            Fp a(static_cast<uint32_t>(rng() % p), p);
            Fp b(static_cast<uint32_t>(rng() % p), p);
            Fp c(static_cast<uint32_t>(rng() % p), p);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == Fp(0, p));
            if (!a.is_zero()) {
                CHECK(a * inverse(a) == Fp(1, p));
                CHECK((a * b) / a == b);
            }
        }
    }
}

TEST_CASE("mixed moduli are rejected") {
    CHECK_THROWS_AS(Fp(1, 7) + Fp(1, 11), invariant_error);
}

TEST_CASE("legendre worked examples") {
    CHECK(legendre_symbol(Fp(2, 7)) == 1);  // 3^2 = 2 mod 7
    CHECK(legendre_symbol(Fp(3, 7)) == -1); // squares mod 7: {1, 2, 4}
    CHECK(legendre_symbol(Fp(0, 7)) == 0);
    CHECK(legendre_symbol(Fp(0, 10007)) == 0);
}

TEST_CASE("legendre multiplicativity, exhaustive for small p") {
    for (uint32_t p : {3u, 5u, 7u, 11u, 31u, 101u}) {
        for (uint32_t a = 1; a < p; ++a)
            for (uint32_t b = 1; b < p; ++b)
                CHECK(legendre_symbol(Fp(a, p)) * legendre_symbol(Fp(b, p)) ==
                      legendre_symbol(Fp(a, p) * Fp(b, p)));
    }
}

TEST_CASE("square roots") {
    std::mt19937_64 rng(99);
    for (uint32_t p : {3u, 5u, 7u, 13u, 101u, 10007u}) { // both p = 1, 3 mod 4
        int squares = 0;
        for (int iter = 0; iter < 100; ++iter) {
            Fp a(static_cast<uint32_t>(rng() % p), p);
            auto r = fp_sqrt(a);
            if (legendre_symbol(a) >= 0) {
                REQUIRE(r.has_value());
                CHECK(*r * *r == a);
                ++squares;
            } else {
                CHECK_FALSE(r.has_value());
            }
        }
        CHECK(squares > 0);
    }
}

TEST_CASE("least nonsquare is a nonsquare") {
    for (uint32_t p : {3u, 5u, 7u, 101u, 9973u})
        CHECK(legendre_symbol(Fp(least_nonsquare(p), p)) == -1);
}

TEST_CASE("Fp2 arithmetic and norm") {
    std::mt19937_64 rng(7);
    for (uint32_t p : {3u, 7u, 101u}) {
        uint32_t c = least_nonsquare(p);
        auto rand2 = [&]() {
            return Fp2(Fp(static_cast<uint32_t>(rng() % p), p),
                       Fp(static_cast<uint32_t>(rng() % p), p), c);
        };
        for (int iter = 0; iter < 100; ++iter) {
            Fp2 a = rand2(), b = rand2();
            CHECK(a * b == b * a);
            CHECK((a + b) * (a - b) == a * a - b * b);
            // norm is multiplicative
            CHECK((a * b).norm() == a.norm() * b.norm());
            // conjugation is the Frobenius: a^p = conj(a)
            CHECK(pow(a, p) == a.conj());
            if (!a.is_zero()) CHECK(a * inverse(a) == field_one(a));
        }
        // every base-field element is a square in Fp2
        for (uint32_t v = 0; v < p; ++v) {
            Fp d(v, p);
            Fp2 s = fp2_sqrt_of_base(d, c);
            CHECK(s * s == Fp2::from_base(d, c));
        }
        // chi2 of a nonzero base element is +1
        CHECK(legendre_symbol(Fp2::from_base(Fp(c, p), c)) == 1);
    }
}
