#pragma once

// Delta-invariants of the germs y^2 = x^r and the combinatorics of their
// versal deformations y^2 = prod (x - a_i)^{n_i}: a deformation fiber is
// admissible when its singularities contribute the same arithmetic genus as
// the original point, which forces every multiplicity to be even.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kummerlab/rational.hpp"

namespace kummerlab {

// delta of y^2 = x^r at the origin: 0 for r = 1 (smooth), r/2 for r even,
// (r-1)/2 for r odd.
int64_t delta_invariant(int64_t r);

// sum m(m-1)/2 over a chain of infinitely-near-point multiplicities.
int64_t genus_contribution(const std::vector<int64_t>& multiplicity_chain);

// The blow-up chain of y^2 = x^r: multiplicity 2 at each of floor(r/2) steps.
std::vector<int64_t> blowup_chain(int64_t r);

// All partitions {n_i} of 2m with sum of delta_invariant(n_i) equal to m,
// each in canonical descending order. (These are exactly the partitions with
// all parts even; the enumerator derives that rather than assuming it.)
std::vector<std::vector<int64_t>> enumerate_deformations(int64_t m);

// All partitions of 2m with their delta totals, for reporting.
struct PartitionDelta {
    std::vector<int64_t> parts;
    int64_t delta_total = 0;
    bool admissible = false;
};
std::vector<PartitionDelta> partitions_with_delta(int64_t m);

// p(m), the ordinary partition counter (oracle for the profile count).
int64_t partition_count(int64_t m);

struct FiberSingularity {
    Rat location;
    int64_t n = 0;     // local germ y^2 = x^n
    int64_t delta = 0;
    std::string germ;  // smooth / node / cusp / higher-order node / higher-order cusp
};

struct VersalFiberReport {
    int64_t m = 0;              // sum n_i = 2m
    std::vector<FiberSingularity> singular_points; // the a_i with n_i >= 2
    int64_t total_delta = 0;
    bool admissible = false;    // total_delta == m
};

// Checks the centering constraint sum n_i a_i = 0 (throws on violation or on
// repeated a_i), classifies each germ, and totals delta against m.
VersalFiberReport versal_fiber_report(const std::vector<std::pair<Rat, int64_t>>& parts);

std::string germ_name(int64_t n);

} // namespace kummerlab
