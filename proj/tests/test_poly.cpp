#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kummerlab/fp.hpp"
#include "kummerlab/poly.hpp"

using namespace kummerlab;

namespace {

UniPoly<Fp> rand_poly(std::mt19937_64& rng, uint32_t p, int max_deg) {
    int deg = static_cast<int>(rng() % (max_deg + 1));
    std::vector<Fp> c;
    for (int i = 0; i <= deg; ++i) c.push_back(Fp(static_cast<uint32_t>(rng() % p), p));
    return UniPoly<Fp>(std::move(c));
}

} // namespace

TEST_CASE("degree conventions") {
    UniPoly<Fp> z;
    CHECK(z.degree() == -1);
    CHECK(z.is_zero_poly());
    UniPoly<Fp> f(std::vector<Fp>{Fp(0, 7), Fp(1, 7), Fp(0, 7)});
    CHECK(f.degree() == 1); // trailing zero trimmed
}

TEST_CASE("divrem is exact division with remainder") {
    std::mt19937_64 rng(31337);
    for (uint32_t p : {3u, 7u, 101u}) {
        for (int iter = 0; iter < 300; ++iter) {
            UniPoly<Fp> a = rand_poly(rng, p, 8);
            UniPoly<Fp> b = rand_poly(rng, p, 5);
            if (b.is_zero_poly()) continue;
            auto [q, r] = divrem(a, b);
            CHECK(q * b + r == a);
            CHECK(r.degree() < b.degree());
        }
    }
}

TEST_CASE("gcd divides both and is monic") {
    std::mt19937_64 rng(555);
    const uint32_t p = 13;
    for (int iter = 0; iter < 200; ++iter) {
        UniPoly<Fp> a = rand_poly(rng, p, 6), b = rand_poly(rng, p, 6);
        UniPoly<Fp> g = poly_gcd(a, b);
        if (g.is_zero_poly()) {
            CHECK(a.is_zero_poly());
            CHECK(b.is_zero_poly());
            continue;
        }
        CHECK(g.lead() == Fp(1, p));
        if (!a.is_zero_poly()) CHECK(divides(g, a));
        if (!b.is_zero_poly()) CHECK(divides(g, b));
    }
}

TEST_CASE("root multiplicity by repeated division") {
    const uint32_t p = 11;
    // (x - 3)^2 (x - 5)
    UniPoly<Fp> f = poly_from_roots(Fp(0, p), {Fp(3, p), Fp(3, p), Fp(5, p)});
    auto [m3, rest3] = root_multiplicity(f, Fp(3, p));
    CHECK(m3 == 2);
    CHECK(rest3 == poly_from_roots(Fp(0, p), {Fp(5, p)}));
    auto [m5, rest5] = root_multiplicity(f, Fp(5, p));
    CHECK(m5 == 1);
    auto [m7, rest7] = root_multiplicity(f, Fp(7, p));
    CHECK(m7 == 0);
    CHECK(rest7 == f);
}

TEST_CASE("powmod matches naive exponentiation") {
    std::mt19937_64 rng(8);
    const uint32_t p = 7;
    for (int iter = 0; iter < 50; ++iter) {
        UniPoly<Fp> b = rand_poly(rng, p, 3);
        UniPoly<Fp> m = rand_poly(rng, p, 4);
        if (m.degree() < 1) continue;
        uint64_t e = rng() % 20;
        UniPoly<Fp> naive = poly_constant(Fp(1, p));
        for (uint64_t i = 0; i < e; ++i) naive = poly_mod(naive * b, m);
        CHECK(poly_powmod(b, e, m) == naive);
    }
}

TEST_CASE("monic square root") {
    std::mt19937_64 rng(21);
    for (uint32_t p : {3u, 5u, 101u}) {
        for (int iter = 0; iter < 100; ++iter) {
            UniPoly<Fp> g = rand_poly(rng, p, 3);
            if (g.is_zero_poly()) continue;
            g = make_monic(g);
            auto s = monic_sqrt(g * g);
            REQUIRE(s.has_value());
            CHECK(*s * *s == g * g);
        }
        // a square-free cubic is never a square
        UniPoly<Fp> f = poly_from_roots(Fp(0, p), {Fp(0, p), Fp(1, p), Fp(2, p)});
        CHECK_FALSE(monic_sqrt(f).has_value());
    }
    // characteristic quirks: (x^3)^2 = x^6 over F_3 has zero derivative but is a square
    UniPoly<Fp> x3(std::vector<Fp>{Fp(0, 3), Fp(0, 3), Fp(0, 3), Fp(1, 3)});
    auto s = monic_sqrt(x3 * x3);
    REQUIRE(s.has_value());
    CHECK(*s == x3);
}

TEST_CASE("evaluation via Horner") {
    const uint32_t p = 101;
    // f = 2 + 3x + x^4
    UniPoly<Fp> f(std::vector<Fp>{Fp(2, p), Fp(3, p), Fp(0, p), Fp(0, p), Fp(1, p)});
    for (uint32_t x = 0; x < p; ++x) {
        uint64_t expect = (2 + 3ull * x) % p;
        uint64_t x4 = (1ull * x * x) % p;
        x4 = x4 * x4 % p;
        expect = (expect + x4) % p;
        CHECK(eval(f, Fp(x, p)) == Fp(static_cast<uint32_t>(expect), p));
    }
}
