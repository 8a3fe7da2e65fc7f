#pragma once

// Plane curves over F_p as homogeneous forms in x0, x1, x2, and the searches
// built on them: linear systems through prescribed points with multiplicity,
// exact line-contact analysis, the Humbert conic search (degree-2 curves
// through five of the q_ij tangent to a spare line), and verification of the
// numerical conditions a Birkenhake-Wilhelm curve must satisfy.

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "kummerlab/fp.hpp"
#include "kummerlab/humbert.hpp"
#include "kummerlab/linalg.hpp"
#include "kummerlab/plane.hpp"
#include "kummerlab/poly.hpp"

namespace kummerlab {

// Exponent triples (e0, e1, e2) with e0 + e1 + e2 = m, graded-lex descending:
// degree 2 reads x0^2, x0 x1, x0 x2, x1^2, x1 x2, x2^2.
std::vector<std::array<int, 3>> monomials_of_degree(int m);

struct PlaneCurve {
    uint32_t p = 0;
    int degree = 0;
    std::vector<Fp> coeffs; // one per monomial, first nonzero coefficient is 1
};

PlaneCurve make_plane_curve(uint32_t p, int degree, const std::vector<int64_t>& coeffs);
PlaneCurve normalize_curve(PlaneCurve c);
Fp eval_curve(const PlaneCurve& c, const ProjPoint& q);

// The fixed Kummer conic x1^2 - x0 x2.
PlaneCurve kummer_conic(uint32_t p);

// Smallest total order of a nonvanishing Hasse derivative at q; 0 means the
// point is off the curve, 1 a smooth point, >= 2 a singular point.
int multiplicity_at(const PlaneCurve& c, const ProjPoint& q);

// All degree-m forms passing through each point with at least the requested
// multiplicity (mu imposes the mu(mu+1)/2 Hasse-derivative conditions of
// order < mu in an affine chart at the point). Tangency is not linear and is
// handled by filtering, not here. Result is a kernel basis, possibly empty.
std::vector<PlaneCurve> linear_system_basis(uint32_t p, int degree,
                                            const std::vector<std::pair<ProjPoint, int>>& through);

struct ConfigurationSpec {
    int degree = 0;
    std::vector<std::pair<std::pair<int, int>, int>> through; // ((i,j) pair of q, multiplicity)
    std::vector<int> tangent_to;                              // applied by filtering
};

std::vector<PlaneCurve> linear_system_basis(const ConfigurationSpec& spec,
                                            const KummerPlaneConfig& cfg);

// A contact point of a curve with a line: rational ones carry exact P^2(F_p)
// coordinates; conjugate pairs over F_{p^2} carry Fp2 coordinates.
struct Contact {
    bool rational = true;
    ProjPoint point;              // valid when rational
    std::array<Fp2, 3> point_ext; // valid when !rational
    int multiplicity = 0;
};

struct LineContactReport {
    bool line_is_component = false;
    bool tangent = false;      // some contact multiplicity >= 2 over the closure (exact)
    std::vector<Contact> contacts;
    int unresolved_degree = 0; // part of the restriction not splitting over F_{p^2}
    bool split_fp2 = true;     // unresolved_degree == 0
    // total intersection multiplicity along the line; always deg(c) by Bezout
    int total_multiplicity = 0;
    // leftover factor (monic, over F_p, no roots in F_p or F_{p^2}) is a
    // perfect square -- i.e. the unresolved contacts all have even multiplicity
    bool unresolved_is_square = true;
};

// Exact contact analysis of c against a line. The tangency verdict is exact
// over the algebraic closure (square-freeness of the restriction); the point
// list is complete over F_{p^2} unless unresolved_degree > 0.
LineContactReport line_contacts(const PlaneCurve& c, const LinearForm& line);

// Spec-facing wrapper: throws invalid_argument when the line divides c.
LineContactReport is_tangent(const PlaneCurve& c, const LinearForm& line);

enum class ConicReject { None, DegenerateFivePoints, Reducible, NotTangent, LineIsComponent };

struct ConicSearchResult {
    std::optional<PlaneCurve> conic;
    ConicReject reject = ConicReject::None;
};

// Humbert's criterion for invariant 5: the unique conic through the five
// chosen q_ij, provided it exists, is irreducible (nonzero symmetric-matrix
// determinant) and is tangent to L_j. Precondition: the five pairs are
// distinct and j avoids every index appearing in them.
ConicSearchResult find_humbert_conic(const KummerPlaneConfig& cfg,
                                     const std::array<std::pair<int, int>, 5>& pairs,
                                     int line_index);

struct SearchHit {
    std::array<std::pair<int, int>, 5> pairs;
    int line = 0;
    PlaneCurve conic;
};

// Exhaustive scan over all (5-subset of the 15 points, admissible line)
// candidates in lexicographic order. stop_after_first trims the scan.
std::vector<SearchHit> humbert_conic_scan(const KummerPlaneConfig& cfg, bool stop_after_first);

struct BwReport {
    int degree = 0;
    int64_t expected_degree = 0;
    bool degree_ok = false;
    int torsion_on_curve = 0; // of the 15 q_ij
    int64_t torsion_budget = 0;
    bool torsion_ok = false;
    bool even_multiplicity_ok = false; // non-torsion line contacts all even
    int64_t line_total = 0;            // sum over the six lines of contact multiplicity
    int64_t expected_line_total = 0;
    bool line_total_ok = false;
    bool contacts_complete = false; // every restriction split over F_{p^2}
};

// Checks the counts the Birkenhake-Wilhelm configuration lemmas prescribe for
// a curve of class h on the given plane. Throws invalid_argument when some
// L_i is a component of c.
BwReport verify_bw_configuration(const PlaneCurve& c, const HumbertClass& h,
                                 const KummerPlaneConfig& cfg);

struct RationalityReport {
    bool rational = false;      // nodal genus count reached zero
    bool undetermined = false;
    int arithmetic_genus = 0;   // (m-1)(m-2)/2
    int nodes_found = 0;
    bool nonnodal_singularity = false;
    bool scan_complete = false; // false when the singular-point scan was truncated
};

// Genus count for nodal curves: rational iff (m-1)(m-2)/2 - #nodes = 0 with
// all singularities ordinary double points. Conics are decided exactly via
// the determinant; for higher degree the singular scan covers P^2(F_p) (and
// P^2(F_{p^2}) for small p) and reports "undetermined" when that is not
// enough to conclude.
RationalityReport rationality_report(const PlaneCurve& c);

} // namespace kummerlab
