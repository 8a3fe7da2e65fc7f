#include "kummerlab/deform.hpp"

#include <stdexcept>

namespace kummerlab {

int64_t delta_invariant(int64_t r) {
    if (r < 1) throw std::invalid_argument("delta_invariant needs r >= 1");
    if (r == 1) return 0;
    return r % 2 == 0 ? r / 2 : (r - 1) / 2;
}

int64_t genus_contribution(const std::vector<int64_t>& multiplicity_chain) {
    int64_t total = 0;
    for (int64_t m : multiplicity_chain) {
        if (m < 1) throw std::invalid_argument("multiplicities must be >= 1");
        total += m * (m - 1) / 2;
    }
    return total;
}

std::vector<int64_t> blowup_chain(int64_t r) {
    if (r < 1) throw std::invalid_argument("blowup_chain needs r >= 1");
    // blowing up y^2 = x^r yields y^2 = x^(r-2): a multiplicity-2 point at
    // every stage until the germ is smooth
    return std::vector<int64_t>(static_cast<size_t>(r / 2), 2);
}

namespace {

void partitions_rec(int64_t remaining, int64_t max_part, std::vector<int64_t>& stack,
                    std::vector<std::vector<int64_t>>& out) {
    if (remaining == 0) {
        out.push_back(stack);
        return;
    }
    for (int64_t part = std::min(remaining, max_part); part >= 1; --part) {
        stack.push_back(part);
        partitions_rec(remaining - part, part, stack, out);
        stack.pop_back();
    }
}

std::vector<std::vector<int64_t>> partitions_of(int64_t n) {
    std::vector<std::vector<int64_t>> out;
    std::vector<int64_t> stack;
    partitions_rec(n, n, stack, out);
    return out;
}

} // namespace

std::vector<PartitionDelta> partitions_with_delta(int64_t m) {
    if (m < 1) throw std::invalid_argument("enumerate_deformations needs m >= 1");
    std::vector<PartitionDelta> out;
    for (auto& parts : partitions_of(2 * m)) {
        PartitionDelta row;
        row.delta_total = 0;
        for (int64_t n : parts) row.delta_total += delta_invariant(n);
        row.admissible = row.delta_total == m;
        row.parts = std::move(parts);
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<std::vector<int64_t>> enumerate_deformations(int64_t m) {
    std::vector<std::vector<int64_t>> out;
    for (auto& row : partitions_with_delta(m))
        if (row.admissible) out.push_back(std::move(row.parts));
    return out;
}

int64_t partition_count(int64_t m) {
    if (m < 0) return 0;
    // standard DP on parts
    std::vector<int64_t> ways(static_cast<size_t>(m) + 1, 0);
    ways[0] = 1;
    for (int64_t part = 1; part <= m; ++part)
        for (int64_t n = part; n <= m; ++n)
            ways[static_cast<size_t>(n)] += ways[static_cast<size_t>(n - part)];
    return ways[static_cast<size_t>(m)];
}

std::string germ_name(int64_t n) {
    if (n == 1) return "smooth";
    if (n == 2) return "node";
    if (n == 3) return "cusp";
    if (n == 4) return "tacnode";
    return n % 2 == 0 ? "higher-order node" : "higher-order cusp";
}

VersalFiberReport versal_fiber_report(const std::vector<std::pair<Rat, int64_t>>& parts) {
    if (parts.empty()) throw std::invalid_argument("empty fiber description");
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = i + 1; j < parts.size(); ++j)
            if (parts[i].first == parts[j].first)
                throw std::invalid_argument("the a_i must be pairwise distinct");

    int64_t total_n = 0;
    Rat centering(0);
    for (const auto& [a, n] : parts) {
        if (n < 1) throw std::invalid_argument("multiplicities n_i must be >= 1");
        total_n += n;
        centering += a * Rat(static_cast<long>(n));
    }
    if (total_n % 2 != 0) throw std::invalid_argument("sum of n_i must be even (equals 2m)");
    if (centering != 0)
        throw std::invalid_argument("centering constraint violated: sum n_i a_i = " +
                                    rat_to_string(centering));

    VersalFiberReport rep;
    rep.m = total_n / 2;
    for (const auto& [a, n] : parts) {
        int64_t d = delta_invariant(n);
        rep.total_delta += d;
        if (n >= 2) rep.singular_points.push_back(FiberSingularity{a, n, d, germ_name(n)});
    }
    rep.admissible = rep.total_delta == rep.m;
    return rep;
}

} // namespace kummerlab
