#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "kummerlab/deform.hpp"

using namespace kummerlab;

namespace {

std::set<std::vector<int64_t>> as_set(const std::vector<std::vector<int64_t>>& v) {
    return {v.begin(), v.end()};
}

} // namespace

TEST_CASE("delta invariants of the germs y^2 = x^r") {
    CHECK(delta_invariant(1) == 0); // smooth
    CHECK(delta_invariant(2) == 1); // ordinary node
    CHECK(delta_invariant(3) == 1); // cusp
    CHECK(delta_invariant(4) == 2); // tacnode
    CHECK(delta_invariant(5) == 2);
    CHECK(delta_invariant(12) == 6);
    CHECK_THROWS_AS(delta_invariant(0), std::invalid_argument);
}

TEST_CASE("genus contributions of multiplicity chains") {
    CHECK(genus_contribution({2}) == 1);
    CHECK(genus_contribution({2, 2}) == 2); // tacnode blow-up chain
    CHECK(genus_contribution({3}) == 3);
    CHECK_THROWS_AS(genus_contribution({0}), std::invalid_argument);
}

TEST_CASE("additivity: delta equals the blow-up chain contribution") {
    for (int64_t r = 1; r <= 20; ++r)
        CHECK(delta_invariant(r) == genus_contribution(blowup_chain(r)));
}

TEST_CASE("admissible deformation profiles, frozen small cases") {
    CHECK(as_set(enumerate_deformations(1)) == std::set<std::vector<int64_t>>{{2}});
    CHECK(as_set(enumerate_deformations(2)) == std::set<std::vector<int64_t>>{{2, 2}, {4}});
    CHECK(as_set(enumerate_deformations(3)) ==
          std::set<std::vector<int64_t>>{{2, 2, 2}, {4, 2}, {6}});
    CHECK(as_set(enumerate_deformations(4)) ==
          std::set<std::vector<int64_t>>{{2, 2, 2, 2}, {4, 2, 2}, {4, 4}, {6, 2}, {8}});
}

TEST_CASE("theorem as a test: every admissible profile has only even parts") {
    for (int64_t m = 1; m <= 12; ++m) {
        auto profiles = enumerate_deformations(m);
        CHECK_FALSE(profiles.empty());
        for (const auto& parts : profiles) {
            int64_t total = 0, delta = 0;
            for (int64_t n : parts) {
                CHECK(n % 2 == 0);
                total += n;
                delta += delta_invariant(n);
            }
            CHECK(total == 2 * m);
            CHECK(delta == m); // conservation
        }
    }
}

TEST_CASE("profile count equals the partition number p(m)") {
    // bijection n_i = 2 p_i between admissible profiles and partitions of m
    for (int64_t m = 1; m <= 12; ++m)
        CHECK(static_cast<int64_t>(enumerate_deformations(m).size()) == partition_count(m));
}

TEST_CASE("inadmissible partitions are reported, not returned") {
    bool saw_inadmissible = false;
    for (const auto& row : partitions_with_delta(2)) {
        if (!row.admissible) {
            saw_inadmissible = true;
            int64_t delta = 0;
            for (int64_t n : row.parts) delta += delta_invariant(n);
            CHECK(delta != 2);
        }
    }
    CHECK(saw_inadmissible); // e.g. (3, 1): a cusp plus a smooth point
}

TEST_CASE("versal fiber report: the three worked cases") {
    {
        // two nodes at +-1: y^2 = (x - 1)^2 (x + 1)^2
        auto rep = versal_fiber_report({{make_rat(1), 2}, {make_rat(-1), 2}});
        CHECK(rep.m == 2);
        CHECK(rep.total_delta == 2);
        CHECK(rep.admissible);
        REQUIRE(rep.singular_points.size() == 2);
        CHECK(rep.singular_points[0].germ == "node");
    }
    {
        // the trivial deformation y^2 = x^4: a tacnode
        auto rep = versal_fiber_report({{make_rat(0), 4}});
        CHECK(rep.m == 2);
        CHECK(rep.total_delta == 2);
        CHECK(rep.admissible);
        REQUIRE(rep.singular_points.size() == 1);
        CHECK(rep.singular_points[0].germ == "tacnode");
    }
    {
        // a cusp and a smooth point: y^2 = (x - 1)^3 (x + 3); centering holds
        // but delta drops to 1, so the fiber is inadmissible
        auto rep = versal_fiber_report({{make_rat(1), 3}, {make_rat(-3), 1}});
        CHECK(rep.m == 2);
        CHECK(rep.total_delta == 1);
        CHECK_FALSE(rep.admissible);
        REQUIRE(rep.singular_points.size() == 1);
        CHECK(rep.singular_points[0].germ == "cusp");
    }
}

TEST_CASE("versal fiber input validation") {
    CHECK_THROWS_AS(versal_fiber_report({{make_rat(1), 2}, {make_rat(1), 2}}),
                    std::invalid_argument); // repeated a_i
    CHECK_THROWS_AS(versal_fiber_report({{make_rat(1), 2}, {make_rat(2), 2}}),
                    std::invalid_argument); // centering violated
    CHECK_THROWS_AS(versal_fiber_report({{make_rat(0), 3}}),
                    std::invalid_argument); // odd total multiplicity
}

TEST_CASE("fractional locations are fine as long as centering holds") {
    // 2 * (3/2) + 6 * (-1/2) = 0
    auto rep = versal_fiber_report({{make_rat(3, 2), 2}, {make_rat(-1, 2), 6}});
    CHECK(rep.m == 4);
    CHECK(rep.total_delta == 4);
    CHECK(rep.admissible);
}
