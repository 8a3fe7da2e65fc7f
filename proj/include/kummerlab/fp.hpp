#pragma once

// Prime fields F_p (p an odd prime) and the quadratic extension F_{p^2},
// realized as F_p[t]/(t^2 - c) for the least nonsquare c. Everything is
// exact; there is no floating point anywhere in this library.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "kummerlab/errors.hpp"

namespace kummerlab {

// Desk-scale modulus bound. Keeps every product of two residues well inside
// uint64_t and keeps trial-division primality checking instant.
inline constexpr uint32_t kMaxModulus = 1'000'000;

bool is_prime_u32(uint32_t n);

// Throws std::invalid_argument unless 3 <= p <= kMaxModulus and p is an odd
// prime (deterministic trial division).
void validate_odd_prime(uint32_t p);

struct Fp {
    uint32_t v = 0; // residue in [0, p)
    uint32_t p = 0; // modulus

    Fp() = default;
    Fp(uint32_t value, uint32_t modulus) : v(value), p(modulus) {
        require_invariant(p != 0 && v < p, "Fp residue in range");
    }

    // Reduces an arbitrary signed integer.
    static Fp make(int64_t x, uint32_t p) {
        int64_t r = x % static_cast<int64_t>(p);
        if (r < 0) r += p;
        return Fp(static_cast<uint32_t>(r), p);
    }

    bool is_zero() const { return v == 0; }

    friend bool operator==(const Fp& a, const Fp& b) { return a.v == b.v && a.p == b.p; }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    friend Fp operator+(const Fp& a, const Fp& b) {
        a.check_same(b);
        uint32_t s = a.v + b.v;
        if (s >= a.p) s -= a.p;
        return Fp(s, a.p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        a.check_same(b);
        uint32_t s = a.v >= b.v ? a.v - b.v : a.v + a.p - b.v;
        return Fp(s, a.p);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        a.check_same(b);
        uint64_t t = static_cast<uint64_t>(a.v) * b.v % a.p;
        return Fp(static_cast<uint32_t>(t), a.p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * inverse(b); }
    Fp operator-() const { return Fp(v == 0 ? 0 : p - v, p); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    // a^(-1) mod p via extended Euclid; zero input is a division-by-zero error.
    friend Fp inverse(const Fp& a);
    friend Fp pow(Fp base, uint64_t e);

    void check_same(const Fp& o) const {
        require_invariant(p == o.p, "Fp operands share a modulus");
    }
};

inline Fp field_zero(const Fp& like) { return Fp(0, like.p); }
inline Fp field_one(const Fp& like) { return Fp(1 % like.p, like.p); }
inline bool is_zero(const Fp& a) { return a.is_zero(); }

// n * 1_K for small n (derivative coefficients, binomials).
inline Fp small_scalar(const Fp& like, uint64_t n) {
    return Fp(static_cast<uint32_t>(n % like.p), like.p);
}

// +1 nonzero square, 0 zero, -1 nonsquare (Euler's criterion).
int legendre_symbol(const Fp& a);

// Least c in [2, p) with legendre(c) = -1. Deterministic, so F_{p^2} is
// reproducible across runs.
uint32_t least_nonsquare(uint32_t p);

// Tonelli-Shanks; nullopt iff a is a nonsquare.
std::optional<Fp> fp_sqrt(const Fp& a);

// F_{p^2} = F_p[t]/(t^2 - c), elements re + im*t. c is carried in each value
// so that mixed-context arithmetic is caught instead of silently wrong.
struct Fp2 {
    Fp re, im;
    uint32_t nonsq = 0;

    Fp2() = default;
    Fp2(Fp r, Fp i, uint32_t c) : re(r), im(i), nonsq(c) {
        require_invariant(r.p == i.p, "Fp2 components share a modulus");
    }
    static Fp2 from_base(const Fp& a, uint32_t c) { return Fp2(a, field_zero(a), c); }

    uint32_t p() const { return re.p; }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    Fp2 conj() const { return Fp2(re, -im, nonsq); }
    // Norm to F_p: re^2 - c*im^2 (= x * x^p).
    Fp norm() const { return re * re - Fp(nonsq, p()) * im * im; }

    friend bool operator==(const Fp2& a, const Fp2& b) {
        return a.re == b.re && a.im == b.im && a.nonsq == b.nonsq;
    }
    friend bool operator!=(const Fp2& a, const Fp2& b) { return !(a == b); }

    friend Fp2 operator+(const Fp2& a, const Fp2& b) {
        a.check_same(b);
        return Fp2(a.re + b.re, a.im + b.im, a.nonsq);
    }
    friend Fp2 operator-(const Fp2& a, const Fp2& b) {
        a.check_same(b);
        return Fp2(a.re - b.re, a.im - b.im, a.nonsq);
    }
    friend Fp2 operator*(const Fp2& a, const Fp2& b) {
        a.check_same(b);
        Fp c(a.nonsq, a.p());
        return Fp2(a.re * b.re + c * a.im * b.im, a.re * b.im + a.im * b.re, a.nonsq);
    }
    friend Fp2 operator/(const Fp2& a, const Fp2& b) { return a * inverse(b); }
    Fp2 operator-() const { return Fp2(-re, -im, nonsq); }

    friend Fp2 inverse(const Fp2& a) {
        if (a.is_zero()) throw std::invalid_argument("division by zero in F_p^2");
        Fp n = inverse(a.norm());
        return Fp2(a.re * n, -(a.im * n), a.nonsq);
    }

    void check_same(const Fp2& o) const {
        require_invariant(p() == o.p() && nonsq == o.nonsq, "Fp2 operands share a context");
    }
};

inline Fp2 field_zero(const Fp2& like) {
    return Fp2(field_zero(like.re), field_zero(like.re), like.nonsq);
}
inline Fp2 field_one(const Fp2& like) {
    return Fp2(field_one(like.re), field_zero(like.re), like.nonsq);
}
inline bool is_zero(const Fp2& a) { return a.is_zero(); }
inline Fp2 small_scalar(const Fp2& like, uint64_t n) {
    return Fp2(small_scalar(like.re, n), field_zero(like.re), like.nonsq);
}

// Quadratic character of F_{p^2}: chi2(x) = chi_p(N(x)).
inline int legendre_symbol(const Fp2& a) { return legendre_symbol(a.norm()); }

Fp2 pow(Fp2 base, uint64_t e);

// sqrt in F_{p^2} of an F_p element (always exists: d = c*s^2 when d is an
// F_p-nonsquare). Used for closed-form roots of irreducible quadratics.
Fp2 fp2_sqrt_of_base(const Fp& d, uint32_t nonsq);

} // namespace kummerlab
