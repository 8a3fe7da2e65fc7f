#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kummerlab/fp.hpp"
#include "kummerlab/linalg.hpp"
#include "kummerlab/rational.hpp"

using namespace kummerlab;

namespace {

Matrix<Rat> rat_matrix(size_t r, size_t c, const std::vector<int64_t>& vals) {
    Matrix<Rat> M(r, c, Rat(0));
    for (size_t i = 0; i < r * c; ++i) M.a[i] = make_rat(vals[i]);
    return M;
}

std::vector<Rat> rat_vec(const std::vector<int64_t>& vals) {
    std::vector<Rat> v;
    for (int64_t x : vals) v.push_back(make_rat(x));
    return v;
}

} // namespace

TEST_CASE("identity system") {
    auto M = rat_matrix(2, 2, {1, 0, 0, 1});
    auto sol = solve_exact(M, rat_vec({3, -1}));
    REQUIRE(sol.particular.has_value());
    CHECK((*sol.particular)[0] == 3);
    CHECK((*sol.particular)[1] == -1);
    CHECK(sol.kernel.empty());
    CHECK(sol.rank == 2);
}

TEST_CASE("rank-1 homogeneous system has the expected kernel") {
    auto M = rat_matrix(2, 2, {1, 1, 2, 2});
    auto sol = solve_exact(M, rat_vec({0, 0}));
    REQUIRE(sol.particular.has_value());
    CHECK((*sol.particular)[0] == 0);
    CHECK((*sol.particular)[1] == 0);
    REQUIRE(sol.kernel.size() == 1);
    // kernel spanned by (1, -1)
    CHECK(sol.kernel[0][0] * Rat(-1) == sol.kernel[0][1]);
    CHECK(sol.kernel[0][0] != 0);
}

TEST_CASE("inconsistent system still reports the kernel") {
    auto M = rat_matrix(2, 2, {1, 1, 2, 2});
    auto sol = solve_exact(M, rat_vec({1, 3}));
    CHECK_FALSE(sol.particular.has_value());
    REQUIRE(sol.kernel.size() == 1);
    CHECK(sol.kernel[0][0] * Rat(-1) == sol.kernel[0][1]);
}

TEST_CASE("random rational systems: exact residual and rank-nullity") {
    std::mt19937_64 rng(4242);
    for (int iter = 0; iter < 200; ++iter) {
        size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
        Matrix<Rat> M(rows, cols, Rat(0));
        for (auto& x : M.a) x = make_rat(static_cast<int64_t>(rng() % 11) - 5,
                                         1 + static_cast<int64_t>(rng() % 3));
        // build a guaranteed-consistent rhs from a random solution
        std::vector<Rat> x0(cols);
        for (auto& x : x0) x = make_rat(static_cast<int64_t>(rng() % 9) - 4);
        std::vector<Rat> v = mat_vec(M, x0);

        auto sol = solve_exact(M, v);
        REQUIRE(sol.particular.has_value());
        auto residual = mat_vec(M, *sol.particular);
        for (size_t i = 0; i < rows; ++i) CHECK(residual[i] == v[i]); // exactly
        CHECK(sol.rank + sol.kernel.size() == cols);
        for (const auto& k : sol.kernel) {
            auto Mk = mat_vec(M, k);
            for (size_t i = 0; i < rows; ++i) CHECK(Mk[i] == 0);
        }
    }
}

TEST_CASE("random prime-field systems") {
    std::mt19937_64 rng(777);
    const uint32_t p = 101;
    for (int iter = 0; iter < 200; ++iter) {
        size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
        Matrix<Fp> M(rows, cols, Fp(0, p));
        for (auto& x : M.a) x = Fp(static_cast<uint32_t>(rng() % p), p);
        std::vector<Fp> v(rows, Fp(0, p));
        for (auto& x : v) x = Fp(static_cast<uint32_t>(rng() % p), p);
        auto sol = solve_exact(M, v);
        CHECK(sol.rank + sol.kernel.size() == cols);
        if (sol.particular) {
            auto residual = mat_vec(M, *sol.particular);
            for (size_t i = 0; i < rows; ++i) CHECK(residual[i] == v[i]);
        } else {
            // inconsistency witnessed: rank of augmented exceeds rank of M,
            // re-checked by solving the homogeneous system with v appended
            Matrix<Fp> A(rows, cols + 1, Fp(0, p));
            for (size_t i = 0; i < rows; ++i) {
                for (size_t j = 0; j < cols; ++j) A.at(i, j) = M.at(i, j);
                A.at(i, cols) = v[i];
            }
            auto aug = solve_exact(A, std::vector<Fp>(rows, Fp(0, p)));
            CHECK(aug.rank == sol.rank + 1);
        }
    }
}

TEST_CASE("rational parsing round-trips") {
    CHECK(rat_to_string(make_rat(7)) == "7");
    CHECK(rat_to_string(make_rat(1, 2)) == "1/2");
    CHECK(rat_to_string(make_rat(-6, 4)) == "-3/2");
    CHECK(rat_from_string("-3/2") == make_rat(-3, 2));
    CHECK(rat_from_string("42") == make_rat(42));
    CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
}
