#pragma once

// Point counts for genus-2 curves y^2 = f(x) over F_p and F_{p^2}, the
// Frobenius data (s1, s2) with characteristic polynomial
// T^4 - s1 T^3 + s2 T^2 - p s1 T + p^2, the Newton-polygon ordinarity test,
// and real-multiplication discriminant detection.

#include <cstdint>
#include <string>
#include <vector>

#include "kummerlab/charsum.hpp"
#include "kummerlab/fp.hpp"
#include "kummerlab/poly.hpp"

namespace kummerlab {

struct Genus2Curve {
    uint32_t p = 0;
    UniPoly<Fp> f; // degree 5 or 6, square-free
};

// Validates: p odd prime, deg f in {5, 6}, f square-free (smooth
// hyperelliptic model). Coefficients are arbitrary integers, reduced mod p.
Genus2Curve make_genus2_curve(uint32_t p, const std::vector<int64_t>& coeffs);

// True iff gcd(f, f') is constant and f' != 0 (f' = 0 means f is a p-th
// power in characteristic p, hence never square-free at these degrees).
bool is_square_free(const UniPoly<Fp>& f);

// #C(F_{p^k}) on the smooth projective model, k in {1, 2}: affine character
// sum plus points at infinity (1 if deg f = 5; for deg f = 6, as many as
// square roots of the leading coefficient exist, i.e. 2 or 0 over F_p and
// always 2 over F_{p^2}). Requires p^k <= 10^8.
uint64_t count_points(const Genus2Curve& c, int k,
                      charsum::Backend backend = charsum::Backend::Auto);

struct FrobeniusSummary {
    uint32_t p = 0;
    uint64_t n1 = 0, n2 = 0;
    int64_t s1 = 0, s2 = 0;
};

// s1 = p + 1 - n1, s2 = (n2 - p^2 - 1 + s1^2) / 2. Throws invalid_argument on
// parity failure or Weil-bound violation (|s1| <= 4 sqrt p, |s1^2 - 2 s2| <= 4p).
FrobeniusSummary frobenius_summary(uint64_t n1, uint64_t n2, uint32_t p);

// Builds a summary directly from (s1, s2); point counts are derived. Used for
// tabulated Frobenius data. Same Weil validation.
FrobeniusSummary summary_from_s(uint32_t p, int64_t s1, int64_t s2);

// Newton polygon has slopes (0, 0, 1, 1) iff p does not divide s2.
bool is_ordinary(const FrobeniusSummary& s);

struct RmDisc {
    int64_t disc = 0;        // s1^2 - 4 s2 + 8p, discriminant of T^2 - s1 T + (s2 - 2p)
    bool real_subfield = false; // disc > 0
    bool split = false;      // disc is a perfect square: the subfield degenerates
    int64_t fundamental = 0; // square-free core adjusted mod 4 (when disc > 0, nonsquare)
};

RmDisc rm_discriminant(const FrobeniusSummary& s);

enum class ReductionClass {
    OrdinaryWithRm,          // p does not divide s2, disc not a square
    SupersingularCandidate,  // p | s1 and p | s2 (necessary condition only)
    Split,                   // disc a perfect square
    NonOrdinaryOther,        // p | s2 but none of the above
};

// Priority when predicates overlap: supersingular-candidate, then split,
// then ordinary-with-RM.
ReductionClass classify_reduction(const FrobeniusSummary& s);

std::string reduction_class_name(ReductionClass c);

bool is_perfect_square_i64(int64_t n);
int64_t fundamental_discriminant(int64_t disc);

} // namespace kummerlab
