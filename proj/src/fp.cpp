#include "kummerlab/fp.hpp"

namespace kummerlab {

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (uint32_t d = 3; static_cast<uint64_t>(d) * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

void validate_odd_prime(uint32_t p) {
    if (p < 3 || p % 2 == 0)
        throw std::invalid_argument("modulus must be an odd prime >= 3, got " + std::to_string(p));
    if (p > kMaxModulus)
        throw std::invalid_argument("modulus exceeds desk-scale bound " + std::to_string(kMaxModulus));
    if (!is_prime_u32(p))
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
}

Fp inverse(const Fp& a) {
    if (a.v == 0) throw std::invalid_argument("division by zero in F_p");
    // extended Euclid on (v, p)
    int64_t r0 = a.v, r1 = a.p, s0 = 1, s1 = 0;
    while (r1 != 0) {
        int64_t q = r0 / r1;
        int64_t r2 = r0 - q * r1;
        int64_t s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    require_invariant(r0 == 1, "gcd(a, p) = 1 for prime p");
    if (s0 < 0) s0 += a.p;
    return Fp(static_cast<uint32_t>(s0), a.p);
}

Fp pow(Fp base, uint64_t e) {
    Fp acc = field_one(base);
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

int legendre_symbol(const Fp& a) {
    if (a.v == 0) return 0;
    Fp r = pow(a, (a.p - 1) / 2);
    return r.v == 1 ? 1 : -1;
}

uint32_t least_nonsquare(uint32_t p) {
    for (uint32_t c = 2; c < p; ++c)
        if (legendre_symbol(Fp(c, p)) == -1) return c;
    throw std::invalid_argument("no nonsquare found; modulus not an odd prime?");
}

std::optional<Fp> fp_sqrt(const Fp& a) {
    const uint32_t p = a.p;
    if (a.v == 0) return a;
    if (legendre_symbol(a) != 1) return std::nullopt;
    if (p % 4 == 3) {
        Fp r = pow(a, (p + 1) / 4);
        return r;
    }
    // Tonelli-Shanks: p - 1 = q * 2^s with q odd
    uint32_t q = p - 1, s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    Fp z = Fp(least_nonsquare(p), p);
    Fp m_c = pow(z, q);
    Fp t = pow(a, q);
    Fp r = pow(a, (q + 1) / 2);
    uint32_t m = s;
    while (t.v != 1) {
        // least i with t^(2^i) = 1
        uint32_t i = 0;
        Fp t2 = t;
        while (t2.v != 1) { t2 *= t2; ++i; }
        Fp b = m_c;
        for (uint32_t j = 0; j + i + 1 < m; ++j) b *= b;
        m_c = b * b;
        t = t * m_c;
        r = r * b;
        m = i;
    }
    return r;
}

Fp2 pow(Fp2 base, uint64_t e) {
    Fp2 acc = field_one(base);
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Fp2 fp2_sqrt_of_base(const Fp& d, uint32_t nonsq) {
    if (auto s = fp_sqrt(d)) return Fp2::from_base(*s, nonsq);
    // d nonsquare: d/c is a square, sqrt(d) = sqrt(d/c) * t
    Fp ratio = d / Fp(nonsq, d.p);
    auto s = fp_sqrt(ratio);
    require_invariant(s.has_value(), "d/c is a square when d is a nonsquare");
    return Fp2(field_zero(d), *s, nonsq);
}

} // namespace kummerlab
