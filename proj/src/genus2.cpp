#include "kummerlab/genus2.hpp"

#include <cmath>
#include <stdexcept>

namespace kummerlab {

namespace {

uint64_t isqrt_u64(uint64_t n) {
    uint64_t r = 0;
    for (int b = 31; b >= 0; --b) {
        uint64_t cand = r | (uint64_t(1) << b);
        if (cand * cand <= n) r = cand;
    }
    return r;
}

} // namespace

bool is_perfect_square_i64(int64_t n) {
    if (n < 0) return false;
    uint64_t r = isqrt_u64(static_cast<uint64_t>(n));
    return r * r == static_cast<uint64_t>(n);
}

bool is_square_free(const UniPoly<Fp>& f) {
    UniPoly<Fp> d = derivative(f);
    if (d.is_zero_poly()) return false; // f = g(x^p) = h^p at degree >= 1
    return poly_gcd(f, d).degree() == 0;
}

Genus2Curve make_genus2_curve(uint32_t p, const std::vector<int64_t>& coeffs) {
    validate_odd_prime(p);
    std::vector<Fp> c;
    c.reserve(coeffs.size());
    for (int64_t x : coeffs) c.push_back(Fp::make(x, p));
    UniPoly<Fp> f(std::move(c));
    if (f.degree() != 5 && f.degree() != 6)
        throw std::invalid_argument("genus-2 model needs deg f in {5, 6}, got degree " +
                                    std::to_string(f.degree()));
    if (!is_square_free(f))
        throw std::invalid_argument("f is not square-free: the model y^2 = f(x) is singular");
    return Genus2Curve{p, std::move(f)};
}

uint64_t count_points(const Genus2Curve& c, int k, charsum::Backend backend) {
    if (k != 1 && k != 2) throw std::invalid_argument("count_points: k must be 1 or 2");
    const uint64_t q = k == 1 ? c.p : uint64_t(c.p) * c.p;
    if (q > 100'000'000ull)
        throw std::invalid_argument("count_points: p^k exceeds desk-scale bound 10^8");

    std::vector<uint32_t> raw;
    raw.reserve(c.f.c.size());
    for (const Fp& a : c.f.c) raw.push_back(a.v);

    charsum::ChiTable t = charsum::build_chi_table(c.p);
    uint64_t affine = k == 1 ? charsum::affine_count_fp(raw, t, backend)
                             : charsum::affine_count_fp2(raw, t, backend);

    uint64_t infinity = 0;
    if (c.f.degree() == 5) {
        infinity = 1;
    } else {
        // two points at infinity iff the leading coefficient is a square in
        // F_{p^k}; every nonzero F_p element is a square in F_{p^2}
        int chi = t.chi[c.f.lead().v];
        infinity = (k == 2 || chi == 1) ? 2 : 0;
    }
    return affine + infinity;
}

FrobeniusSummary frobenius_summary(uint64_t n1, uint64_t n2, uint32_t p) {
    validate_odd_prime(p);
    const int64_t pp = static_cast<int64_t>(p);
    int64_t s1 = pp + 1 - static_cast<int64_t>(n1);
    if (s1 * s1 > 16 * pp)
        throw std::invalid_argument("invalid counts: |s1| exceeds the Weil bound 4 sqrt p");
    int64_t t = static_cast<int64_t>(n2) - pp * pp - 1 + s1 * s1;
    if (t % 2 != 0)
        throw std::invalid_argument("invalid counts: s2 = (n2 - p^2 - 1 + s1^2)/2 is not an integer");
    int64_t s2 = t / 2;
    int64_t tr2 = s1 * s1 - 2 * s2; // sum of squared Frobenius eigenvalues
    if (tr2 > 4 * pp * pp || tr2 < -4 * pp * pp)
        throw std::invalid_argument("invalid counts: n2 violates the genus-2 Weil bound");
    return FrobeniusSummary{p, n1, n2, s1, s2};
}

FrobeniusSummary summary_from_s(uint32_t p, int64_t s1, int64_t s2) {
    const int64_t pp = static_cast<int64_t>(p);
    int64_t n1 = pp + 1 - s1;
    int64_t n2 = pp * pp + 1 - (s1 * s1 - 2 * s2);
    if (n1 < 0 || n2 < 0) throw std::invalid_argument("(s1, s2) yields negative point counts");
    return frobenius_summary(static_cast<uint64_t>(n1), static_cast<uint64_t>(n2), p);
}

bool is_ordinary(const FrobeniusSummary& s) {
    return s.s2 % static_cast<int64_t>(s.p) != 0;
}

int64_t fundamental_discriminant(int64_t disc) {
    require_invariant(disc > 0, "fundamental discriminant needs disc > 0");
    // square-free core
    int64_t core = disc;
    for (int64_t d = 2; d * d <= core; ++d)
        while (core % (d * d) == 0) core /= d * d;
    return core % 4 == 1 ? core : 4 * core;
}

RmDisc rm_discriminant(const FrobeniusSummary& s) {
    RmDisc out;
    const int64_t p = static_cast<int64_t>(s.p);
    out.disc = s.s1 * s.s1 - 4 * s.s2 + 8 * p;
    out.real_subfield = out.disc > 0;
    out.split = out.disc >= 0 && is_perfect_square_i64(out.disc);
    if (out.real_subfield && !out.split) out.fundamental = fundamental_discriminant(out.disc);
    return out;
}

ReductionClass classify_reduction(const FrobeniusSummary& s) {
    const int64_t p = static_cast<int64_t>(s.p);
    RmDisc rm = rm_discriminant(s);
    if (s.s1 % p == 0 && s.s2 % p == 0) return ReductionClass::SupersingularCandidate;
    if (rm.split) return ReductionClass::Split;
    if (s.s2 % p != 0) return ReductionClass::OrdinaryWithRm;
    return ReductionClass::NonOrdinaryOther;
}

std::string reduction_class_name(ReductionClass c) {
    switch (c) {
    case ReductionClass::OrdinaryWithRm: return "ordinary-with-rm";
    case ReductionClass::SupersingularCandidate: return "supersingular-candidate";
    case ReductionClass::Split: return "split";
    case ReductionClass::NonOrdinaryOther: return "non-ordinary-other";
    }
    return "unknown";
}

} // namespace kummerlab
