#include "kummerlab/boundary.hpp"

#include <stdexcept>

#include "kummerlab/linalg.hpp"

namespace kummerlab {

namespace {

Matrix<Rat> gram_as_rat(const SpecialFiberGraph& g) {
    const size_t n = g.labels.size();
    Matrix<Rat> M(n, n, Rat(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) M.at(i, j) = Rat(static_cast<long>(g.gram[i][j]));
    return M;
}

} // namespace

SpecialFiberGraph make_fiber_graph(std::vector<std::string> labels,
                                   std::vector<std::vector<int64_t>> gram,
                                   std::vector<int64_t> mult) {
    const size_t n = labels.size();
    if (n == 0) throw std::invalid_argument("fiber graph needs at least one component");
    if (gram.size() != n || mult.size() != n)
        throw std::invalid_argument("gram/mult dimensions must match the component count");
    for (size_t i = 0; i < n; ++i) {
        if (gram[i].size() != n) throw std::invalid_argument("gram matrix must be square");
        for (size_t j = 0; j < n; ++j) {
            if (gram[i][j] != gram[j][i]) throw std::invalid_argument("gram matrix must be symmetric");
            if (i != j && gram[i][j] < 0)
                throw std::invalid_argument("distinct components meet nonnegatively");
        }
        if (mult[i] <= 0) throw std::invalid_argument("fiber multiplicities must be positive");
    }
    for (size_t i = 0; i < n; ++i) {
        int64_t dot = 0;
        for (size_t j = 0; j < n; ++j) dot += gram[i][j] * mult[j];
        if (dot != 0)
            throw std::invalid_argument("fiber relation S*mu = 0 fails in row " + labels[i]);
    }

    SpecialFiberGraph g{std::move(labels), std::move(gram), std::move(mult)};
    auto sol = solve_exact(gram_as_rat(g), std::vector<Rat>(n, Rat(0)));
    if (sol.kernel.size() != 1)
        throw std::invalid_argument("degenerate graph: kernel of S has dimension " +
                                    std::to_string(sol.kernel.size()));
    return g;
}

DefaultGraphResult build_default_graph(int r, int64_t q12,
                                       const std::optional<std::vector<int64_t>>& mult) {
    if (r < 1)
        throw std::invalid_argument("the resolved node carries at least one exceptional curve");
    if (q12 < 0) throw std::invalid_argument("q12 must be nonnegative");
    const size_t n = static_cast<size_t>(r) + 2;

    std::vector<int64_t> mu;
    if (mult) {
        if (mult->size() != n)
            throw std::invalid_argument("mult must have length r + 2");
        for (int64_t m : *mult)
            if (m <= 0) throw std::invalid_argument("fiber multiplicities must be positive");
        mu = *mult;
    } else {
        // mu(Q1) = mu(Q2) = 1 and a constant chain mu(E_j) = 2: the unique
        // choice realizing the self-intersection -1 of a fresh blow-up when r = 1
        mu.assign(n, 2);
        mu[0] = mu[1] = 1;
    }

    std::vector<std::string> labels{"Q1", "Q2"};
    for (int j = 1; j <= r; ++j) labels.push_back("E" + std::to_string(j));

    std::vector<std::vector<int64_t>> S(n, std::vector<int64_t>(n, 0));
    S[0][1] = S[1][0] = q12;
    const size_t er = n - 1; // E_r
    S[0][er] = S[er][0] = 1;
    S[1][er] = S[er][1] = 1;
    for (size_t j = 2; j + 1 < n; ++j) S[j][j + 1] = S[j + 1][j] = 1;

    // diagonal from the fiber relation
    std::vector<std::string> notes;
    for (size_t i = 0; i < n; ++i) {
        int64_t off = 0;
        for (size_t j = 0; j < n; ++j)
            if (j != i) off += S[i][j] * mu[j];
        if (off % mu[i] != 0)
            throw std::invalid_argument("infeasible graph: no integer self-intersection for " +
                                        labels[i] + " satisfies the fiber relation");
        S[i][i] = -off / mu[i];
        if (i >= 2 && S[i][i] != -1)
            notes.push_back(labels[i] + "^2 = " + std::to_string(S[i][i]) +
                            " (blow-up chain expects -1)");
    }

    return DefaultGraphResult{make_fiber_graph(std::move(labels), std::move(S), std::move(mu)),
                              std::move(notes)};
}

std::vector<int64_t> default_horizontal(const SpecialFiberGraph& g) {
    std::vector<int64_t> h(g.labels.size(), 0);
    h[0] = 1;
    h[1] = -1;
    return h;
}

BoundarySolution solve_boundary(const SpecialFiberGraph& g, const std::vector<int64_t>& h,
                                size_t normalize_index) {
    const size_t n = g.labels.size();
    if (h.size() != n) throw std::invalid_argument("horizontal data length mismatch");
    if (normalize_index >= n) throw std::invalid_argument("normalization index out of range");

    // consistency: h must pair to zero against the fiber class
    int64_t pairing = 0;
    for (size_t i = 0; i < n; ++i) pairing += h[i] * g.mult[i];
    if (pairing != 0)
        throw std::invalid_argument(
            "no rational function with this horizontal divisor exists on this model "
            "(h is not orthogonal to the fiber)");

    std::vector<Rat> rhs(n);
    for (size_t i = 0; i < n; ++i) rhs[i] = Rat(static_cast<long>(-h[i]));
    auto sol = solve_exact(gram_as_rat(g), rhs);
    require_invariant(sol.kernel.size() == 1, "fiber graph kernel is one-dimensional");
    if (!sol.particular)
        throw std::invalid_argument("boundary system inconsistent despite fiber orthogonality");

    // kernel generator must be proportional to mu
    const std::vector<Rat>& ker = sol.kernel[0];
    size_t anchor = 0;
    while (anchor < n && ker[anchor] == 0) ++anchor;
    require_invariant(anchor < n, "kernel generator nonzero");
    Rat ratio = Rat(static_cast<long>(g.mult[anchor])) / ker[anchor];
    for (size_t i = 0; i < n; ++i)
        require_invariant(ker[i] * ratio == Rat(static_cast<long>(g.mult[i])),
                          "kernel of S is spanned by the fiber class");

    // gauge: subtract (x_norm / mu_norm) * mu so the chosen coefficient is 0
    std::vector<Rat> x = *sol.particular;
    Rat shift = x[normalize_index] / Rat(static_cast<long>(g.mult[normalize_index]));
    for (size_t i = 0; i < n; ++i) x[i] -= shift * Rat(static_cast<long>(g.mult[i]));

    // exact residual check: S x + h = 0
    auto Sx = mat_vec(gram_as_rat(g), x);
    for (size_t i = 0; i < n; ++i)
        require_invariant(Sx[i] + Rat(static_cast<long>(h[i])) == 0, "boundary residual is zero");

    BoundarySolution out;
    out.a = x[0];
    out.b = x[1];
    out.full = x;
    out.chain.assign(x.begin() + 2, x.end());
    out.kernel.reserve(n);
    for (size_t i = 0; i < n; ++i) out.kernel.push_back(Rat(static_cast<long>(g.mult[i])));
    return out;
}

Rat closed_form_a(const SpecialFiberGraph& g) {
    if (g.labels.size() < 2) throw std::invalid_argument("graph needs Q1 and Q2");
    int64_t q12 = g.gram[0][1];
    int64_t q11 = g.gram[0][0];
    if (q12 == q11)
        throw std::invalid_argument("degenerate: (Q1.Q2) = (Q1.Q1), the closed form diverges");
    return Rat(2) / Rat(static_cast<long>(q12 - q11));
}

FormalDivisor decomposable_boundary(int64_t valuation, const std::string& label) {
    FormalDivisor d;
    if (valuation != 0) d.emplace_back(label, valuation);
    return d;
}

CocycleResult verify_cocycle(const std::vector<std::pair<std::string, FormalDivisor>>& terms) {
    CocycleResult res;
    for (const auto& [curve, div] : terms) {
        (void)curve;
        for (const auto& [pt, mult] : div) {
            res.residue[pt] += mult;
            if (res.residue[pt] == 0) res.residue.erase(pt);
        }
    }
    res.ok = res.residue.empty();
    return res;
}

} // namespace kummerlab
