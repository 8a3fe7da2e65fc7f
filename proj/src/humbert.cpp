#include "kummerlab/humbert.hpp"

#include <stdexcept>

namespace kummerlab {

std::string delta_case_name(DeltaCase c) {
    switch (c) {
    case DeltaCase::I: return "I";
    case DeltaCase::II: return "II";
    case DeltaCase::III: return "III";
    case DeltaCase::IV: return "IV";
    }
    return "?";
}

int64_t humbert_invariant(const PolarizedLatticeVector& v) {
    return v.dot_with_l0 * v.dot_with_l0 - 2 * v.self_int;
}

int64_t delta_of_class(DeltaCase c, int64_t d, int64_t k) {
    switch (c) {
    case DeltaCase::I: return 8 * d * d + 9 - 2 * k;
    case DeltaCase::II: return 8 * d * (d + 1) + 9 - 2 * k;
    case DeltaCase::III: return 8 * d * d + 8 - 2 * k;
    case DeltaCase::IV: return 8 * d * (d + 1) + 12 - 2 * k;
    }
    throw std::invalid_argument("bad case");
}

std::vector<HumbertClass> classify_delta(int64_t delta) {
    if (delta <= 0) throw std::invalid_argument("classify_delta needs delta > 0");
    std::vector<HumbertClass> out;
    // 8d^2 <= delta + 24 bounds every case: each formula gives
    // 8d^2 <= 8d(d+1) = delta - (9 or 12) + 2k <= delta + 15.
    for (int64_t d = 1; 8 * d * d <= delta + 24; ++d) {
        for (int64_t k : {4, 6, 8, 10, 12}) {
            for (DeltaCase c : {DeltaCase::I, DeltaCase::II, DeltaCase::III, DeltaCase::IV}) {
                if (delta_of_class(c, d, k) == delta) out.push_back(HumbertClass{delta, c, d, k});
            }
        }
    }
    return out;
}

static bool is_case_i_or_iii(DeltaCase c) { return c == DeltaCase::I || c == DeltaCase::III; }

int64_t sum_bundle_exponent(const HumbertClass& h) {
    if (h.d < 1) throw std::invalid_argument("sum_bundle_exponent requires d >= 1");
    return 4 * h.d + 1;
}

int64_t expected_degree(const HumbertClass& h) {
    return is_case_i_or_iii(h.kase) ? 2 * h.d : 2 * h.d + 1;
}

int64_t torsion_budget(const HumbertClass& h) {
    return is_case_i_or_iii(h.kase) ? h.k - 1 : h.k;
}

int64_t line_intersection_total(const HumbertClass& h) {
    return is_case_i_or_iii(h.kase) ? 12 * h.d : 12 * h.d + 6;
}

CaseIExponents case_I_exponents(const HumbertClass& h) {
    if (h.kase != DeltaCase::I)
        throw std::invalid_argument("line-bundle exponents unspecified by source for case " +
                                    delta_case_name(h.kase));
    if (h.d < 1) throw std::invalid_argument("case_I_exponents requires d >= 1");
    return CaseIExponents{2 * h.d, 1, 2 * h.d + 1, -1};
}

std::vector<std::pair<int64_t, std::vector<HumbertClass>>> scaling_family(int64_t delta,
                                                                          int64_t m_max) {
    if (delta <= 0) throw std::invalid_argument("scaling_family needs delta > 0");
    if (m_max < 1) throw std::invalid_argument("scaling_family needs m_max >= 1");
    std::vector<std::pair<int64_t, std::vector<HumbertClass>>> out;
    for (int64_t m = 1; m <= m_max; ++m)
        out.emplace_back(m * m * delta, classify_delta(m * m * delta));
    return out;
}

} // namespace kummerlab
