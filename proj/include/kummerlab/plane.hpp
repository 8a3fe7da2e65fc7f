#pragma once

// The Kummer-plane configuration over F_p: the conic x1^2 = x0 x2, the six
// tangent lines attached to six Weierstrass values, and the fifteen pairwise
// intersection points q_ij carrying the nonzero 2-torsion labels.
//
// Coordinate model: L_i is the tangent to the conic at (1 : l_i : l_i^2),
//   L_i : l_i^2 x0 - 2 l_i x1 + x2 = 0,    q_ij = (1 : (l_i + l_j)/2 : l_i l_j).

#include <array>
#include <cstdint>
#include <vector>

#include "kummerlab/fp.hpp"

namespace kummerlab {

struct ProjPoint {
    Fp x0, x1, x2;

    // Scales so the first nonzero coordinate is 1.
    ProjPoint normalized() const;
    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
        ProjPoint u = a.normalized(), v = b.normalized();
        return u.x0 == v.x0 && u.x1 == v.x1 && u.x2 == v.x2;
    }
};

struct LinearForm {
    Fp a0, a1, a2; // a0 x0 + a1 x1 + a2 x2
    Fp eval(const ProjPoint& q) const { return a0 * q.x0 + a1 * q.x1 + a2 * q.x2; }
};

struct WeierstrassSet {
    uint32_t p = 0;
    std::array<Fp, 6> lambda;
};

// Validates p odd prime and the six values pairwise distinct.
WeierstrassSet make_weierstrass_set(uint32_t p, const std::array<int64_t, 6>& values);

struct PlanePoint {
    int i = 0, j = 0; // 0-based pair, i < j; doubles as the 2-torsion label
    ProjPoint q;
};

struct KummerPlaneConfig {
    uint32_t p = 0;
    std::array<Fp, 6> lambda;
    std::array<LinearForm, 6> lines;
    std::vector<PlanePoint> points; // the 15 unordered pairs, lexicographic
    bool degenerate = false;        // coincidences among the 15 points (flag, not fatal)
};

// Builds the configuration and verifies tangency and incidence internally
// before returning (invariant_error on failure).
KummerPlaneConfig build_plane(const WeierstrassSet& w);

const PlanePoint& point_of_pair(const KummerPlaneConfig& cfg, int i, int j);

struct IncidenceRow {
    int i, j;
    std::vector<int> lines_through; // indices of all lines vanishing at q_ij
};

// Exhaustive line-through-point table; in the generic case every point lies
// on exactly its two defining lines.
std::vector<IncidenceRow> incidence_report(const KummerPlaneConfig& cfg);

struct TangencyCertificate {
    int line = 0;
    ProjPoint contact;            // (1 : l_i : l_i^2)
    bool double_root = false;     // restriction of the conic is a perfect square there
    std::array<Fp, 3> restriction; // conic restricted to the line, as a quadratic in the parameter
};

// Certificate that L_i is tangent to the conic: restricting x1^2 - x0 x2 to a
// parametrization of L_i yields a quadratic with a double root at the contact.
TangencyCertificate tangency_certificate(const KummerPlaneConfig& cfg, int i);

// Maps six branch values on P^1, one possibly at infinity, to six finite
// pairwise-distinct values by a Moebius change of coordinate (identity when
// all six are already finite). Used when f has degree 5.
std::array<Fp, 6> lambdas_from_branch_points(const std::vector<Fp>& finite_roots,
                                             bool root_at_infinity);

} // namespace kummerlab
