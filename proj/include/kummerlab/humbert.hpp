#pragma once

// Closed-form arithmetic of the Humbert invariant: the four-case
// representation Delta = 8d^2+9-2k | 8d(d+1)+9-2k | 8d^2+8-2k | 8d(d+1)+12-2k
// with d >= 1, k in {4,6,8,10,12}, and the derived quantities: the line-bundle
// exponent sum N = 4d+1, the curve degree, the 2-torsion passage budget, and
// the total line-intersection number.

#include <cstdint>
#include <string>
#include <vector>

namespace kummerlab {

enum class DeltaCase { I, II, III, IV };

std::string delta_case_name(DeltaCase c);

struct HumbertClass {
    int64_t delta = 0;
    DeltaCase kase = DeltaCase::I;
    int64_t d = 1;
    int64_t k = 4;
};

// Numerical class of a line bundle against the principal polarization.
struct PolarizedLatticeVector {
    int64_t dot_with_l0 = 0; // L . L0
    int64_t self_int = 0;    // L^2
};

// Self-intersection of the principal polarization: chi(L0) = 1 and
// chi = L^2 / 2 give L0^2 = 2. Degree of the hyperplane section on the
// Kummer quartic is 4.
inline constexpr int64_t kPrincipalSelfIntersection = 2;
inline constexpr int64_t kHyperplaneSelfIntersection = 4;

// Delta(L) = (L . L0)^2 - 2 L^2.
int64_t humbert_invariant(const PolarizedLatticeVector& v);

// Evaluates the case formula for (case, d, k).
int64_t delta_of_class(DeltaCase c, int64_t d, int64_t k);

// All representations (case, d, k) of delta, exhaustive (d is bounded by the
// formulas, so the scan terminates). Empty list is a valid answer.
std::vector<HumbertClass> classify_delta(int64_t delta);

// N with Q1 + Q2 in |C0^N|: N = 4d + 1. Requires d >= 1.
int64_t sum_bundle_exponent(const HumbertClass& h);

// deg Q' = 2d (cases I, III) or 2d+1 (II, IV).
int64_t expected_degree(const HumbertClass& h);

// Number of 2-torsion images on Q': k-1 (cases I, III) or k (II, IV).
int64_t torsion_budget(const HumbertClass& h);

// Sum over the six lines of (L_i . Q') = 12d or 12d+6; always equals
// 6 * expected_degree.
int64_t line_intersection_total(const HumbertClass& h);

struct CaseIExponents {
    int64_t a1 = 0, b1 = 0; // D1 in L0^a1 (x) LDelta^b1
    int64_t a2 = 0, b2 = 0; // D2 in the conjugate bundle
};

// Case I only: ((2d, +1), (2d+1, -1)); exponents for cases II-IV are not
// specified by the source and are refused rather than guessed.
CaseIExponents case_I_exponents(const HumbertClass& h);

// classify_delta(m^2 delta) for m = 1..m_max (a bundle of invariant Delta
// yields bundles of invariant m^2 Delta).
std::vector<std::pair<int64_t, std::vector<HumbertClass>>> scaling_family(int64_t delta,
                                                                          int64_t m_max);

} // namespace kummerlab
