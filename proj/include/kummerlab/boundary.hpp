#pragma once

// The special fiber of the resolved nodal model as a weighted intersection
// graph (components Q1, Q2, E1..Er; symmetric Gram matrix S; multiplicity
// vector mu with S mu = 0), and the exact solve for the boundary coefficients
// of div(f): S x = -h, unique up to the fiber class, normalized so the
// Q2-coefficient vanishes. Also the elementary boundary of decomposable
// elements and the cocycle checker for formal sums of (curve, function).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kummerlab/rational.hpp"

namespace kummerlab {

struct SpecialFiberGraph {
    std::vector<std::string> labels; // Q1, Q2, E1..Er
    std::vector<std::vector<int64_t>> gram;
    std::vector<int64_t> mult; // positive, S mult = 0, spans the kernel
};

// Validates: square symmetric, nonnegative off-diagonal, mu positive,
// S mu = 0 exactly, kernel dimension 1. Throws invalid_argument otherwise.
SpecialFiberGraph make_fiber_graph(std::vector<std::string> labels,
                                   std::vector<std::vector<int64_t>> gram,
                                   std::vector<int64_t> mult);

struct DefaultGraphResult {
    SpecialFiberGraph graph;
    // deviations from the blow-up chain pattern (self-intersection -1),
    // one note per deviating entry
    std::vector<std::string> notes;
};

// The chain model: components (Q1, Q2, E1..Er) with E_j.E_{j+1} = 1,
// E_r.Q_i = 1, all other off-diagonal pairs 0 except Q1.Q2 = q12. Diagonal
// entries are always derived from the fiber relation S mu = 0 (infeasible
// when that forces a non-integer). mult = nullopt derives mu = (1,1,2,...,2),
// which realizes the chain self-intersection -1 exactly when r = 1.
DefaultGraphResult build_default_graph(int r, int64_t q12,
                                       const std::optional<std::vector<int64_t>>& mult);

struct BoundarySolution {
    Rat a, b;                // coefficients of Q1, Q2 (b = 0 after normalization)
    std::vector<Rat> chain;  // coefficients of E1..Er
    std::vector<Rat> full;   // all of the above in component order
    std::vector<Rat> kernel; // the solver's kernel generator (a multiple of mu)
};

// Solves S x = -h exactly and gauges away the fiber class so that the
// coefficient of the component at normalize_index (default Q2) is zero.
// Throws invalid_argument when h is not orthogonal to the fiber (no rational
// function with this horizontal divisor exists on this model).
BoundarySolution solve_boundary(const SpecialFiberGraph& g, const std::vector<int64_t>& h,
                                size_t normalize_index = 1);

// The standard horizontal data (H.Q1, H.Q2, H.E_j) = (1, -1, 0, ..., 0).
std::vector<int64_t> default_horizontal(const SpecialFiberGraph& g);

// a = 2 / ((Q1.Q2) - (Q1.Q1)); matches solve_boundary's a-component whenever
// the chain intersection pattern and the default h hold.
Rat closed_form_a(const SpecialFiberGraph& g);

// A formal divisor as a point-multiplicity list; points are opaque labels
// shared across terms. Repeated labels accumulate.
using FormalDivisor = std::vector<std::pair<std::string, int64_t>>;

// boundary of a decomposable element (D, a): ord_p(a) * D_p.
FormalDivisor decomposable_boundary(int64_t valuation, const std::string& label);

struct CocycleResult {
    bool ok = false;
    std::map<std::string, int64_t> residue; // empty iff ok
};

// Sums the divisors of a formal chain sum_i (C_i, f_i); the cocycle condition
// holds iff the total divisor cancels.
CocycleResult verify_cocycle(const std::vector<std::pair<std::string, FormalDivisor>>& terms);

} // namespace kummerlab
