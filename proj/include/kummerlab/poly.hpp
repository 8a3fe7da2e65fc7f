#pragma once

// Univariate polynomials over an exact field K (F_p, F_{p^2}, Q).
// Coefficients are stored ascending; the zero polynomial is the empty vector
// and has degree -1 (standing in for degree -infinity).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kummerlab/errors.hpp"

namespace kummerlab {

template <class K>
struct UniPoly {
    std::vector<K> c; // ascending, trailing coefficient nonzero after trim()

    UniPoly() = default;
    explicit UniPoly(std::vector<K> coeffs) : c(std::move(coeffs)) { trim(); }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero_poly() const { return c.empty(); }

    const K& lead() const {
        if (c.empty()) throw std::invalid_argument("leading coefficient of zero polynomial");
        return c.back();
    }

    void trim() {
        while (!c.empty() && is_zero(c.back())) c.pop_back();
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c == b.c; }
};

template <class K>
UniPoly<K> poly_zero() { return UniPoly<K>{}; }

template <class K>
UniPoly<K> poly_constant(const K& a) {
    return UniPoly<K>(std::vector<K>{a});
}

// x - r
template <class K>
UniPoly<K> poly_linear_root(const K& r) {
    return UniPoly<K>(std::vector<K>{-r, field_one(r)});
}

template <class K>
UniPoly<K> operator+(const UniPoly<K>& a, const UniPoly<K>& b) {
    std::vector<K> out = a.c.size() >= b.c.size() ? a.c : b.c;
    const std::vector<K>& small = a.c.size() >= b.c.size() ? b.c : a.c;
    for (size_t i = 0; i < small.size(); ++i) out[i] = out[i] + small[i];
    return UniPoly<K>(std::move(out));
}

template <class K>
UniPoly<K> operator-(const UniPoly<K>& a) {
    std::vector<K> out = a.c;
    for (auto& x : out) x = -x;
    return UniPoly<K>(std::move(out));
}

template <class K>
UniPoly<K> operator-(const UniPoly<K>& a, const UniPoly<K>& b) {
    return a + (-b);
}

template <class K>
UniPoly<K> operator*(const UniPoly<K>& a, const UniPoly<K>& b) {
    if (a.is_zero_poly() || b.is_zero_poly()) return {};
    K z = field_zero(a.c[0]);
    std::vector<K> out(a.c.size() + b.c.size() - 1, z);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            out[i + j] = out[i + j] + a.c[i] * b.c[j];
    return UniPoly<K>(std::move(out));
}

template <class K>
UniPoly<K> operator*(const K& s, const UniPoly<K>& a) {
    std::vector<K> out = a.c;
    for (auto& x : out) x = s * x;
    return UniPoly<K>(std::move(out));
}

template <class K>
K eval(const UniPoly<K>& a, const K& x) {
    K acc = field_zero(x);
    for (size_t i = a.c.size(); i-- > 0;) acc = acc * x + a.c[i];
    return acc;
}

template <class K>
UniPoly<K> derivative(const UniPoly<K>& a) {
    if (a.c.size() <= 1) return {};
    std::vector<K> out;
    out.reserve(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i)
        out.push_back(small_scalar(a.c[i], i) * a.c[i]);
    return UniPoly<K>(std::move(out));
}

template <class K>
std::pair<UniPoly<K>, UniPoly<K>> divrem(const UniPoly<K>& a, const UniPoly<K>& b) {
    if (b.is_zero_poly()) throw std::invalid_argument("polynomial division by zero");
    if (a.degree() < b.degree()) return {UniPoly<K>{}, a};
    K inv_lead = inverse(b.lead());
    std::vector<K> rem = a.c;
    const size_t db = static_cast<size_t>(b.degree());
    std::vector<K> quot(rem.size() - db, field_zero(b.lead()));
    for (size_t i = rem.size() - 1; i + 1 > db; --i) {
        K q = rem[i] * inv_lead;
        if (!is_zero(q)) {
            quot[i - db] = q;
            for (size_t j = 0; j <= db; ++j)
                rem[i - db + j] = rem[i - db + j] - q * b.c[j];
        }
        if (i == db) break;
    }
    return {UniPoly<K>(std::move(quot)), UniPoly<K>(std::move(rem))};
}

template <class K>
UniPoly<K> poly_mod(const UniPoly<K>& a, const UniPoly<K>& b) {
    return divrem(a, b).second;
}

template <class K>
bool divides(const UniPoly<K>& d, const UniPoly<K>& a) {
    return poly_mod(a, d).is_zero_poly();
}

template <class K>
UniPoly<K> make_monic(const UniPoly<K>& a) {
    if (a.is_zero_poly()) return a;
    return inverse(a.lead()) * a;
}

// Monic gcd; gcd(0, 0) = 0.
template <class K>
UniPoly<K> poly_gcd(UniPoly<K> a, UniPoly<K> b) {
    while (!b.is_zero_poly()) {
        UniPoly<K> r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

// base^e mod m.
template <class K>
UniPoly<K> poly_powmod(UniPoly<K> base, uint64_t e, const UniPoly<K>& m) {
    if (m.degree() < 1) throw std::invalid_argument("powmod modulus must have degree >= 1");
    base = poly_mod(base, m);
    UniPoly<K> acc = poly_constant(field_one(m.lead()));
    while (e) {
        if (e & 1) acc = poly_mod(acc * base, m);
        base = poly_mod(base * base, m);
        e >>= 1;
    }
    return acc;
}

template <class K>
UniPoly<K> poly_from_roots(const K& like, const std::vector<K>& roots) {
    UniPoly<K> acc = poly_constant(field_one(like));
    for (const K& r : roots) acc = acc * poly_linear_root(r);
    return acc;
}

// Multiplicity of r as a root of a (0 when a(r) != 0); also returns a with
// the factor (x - r)^mult removed.
template <class K>
std::pair<int, UniPoly<K>> root_multiplicity(UniPoly<K> a, const K& r) {
    int mult = 0;
    UniPoly<K> lin = poly_linear_root(r);
    while (!a.is_zero_poly() && is_zero(eval(a, r))) {
        auto [q, rem] = divrem(a, lin);
        require_invariant(rem.is_zero_poly(), "exact division by detected root");
        a = std::move(q);
        ++mult;
    }
    return {mult, std::move(a)};
}

// Monic square root by top-down coefficient matching; requires odd
// characteristic or Q (2 invertible). nullopt when no monic square root exists.
template <class K>
std::optional<UniPoly<K>> monic_sqrt(const UniPoly<K>& f) {
    if (f.is_zero_poly()) return UniPoly<K>{};
    int n = f.degree();
    if (n % 2 != 0) return std::nullopt;
    if (!is_zero(f.lead() - field_one(f.lead()))) return std::nullopt;
    int s = n / 2;
    K zero = field_zero(f.lead());
    K one = field_one(f.lead());
    std::vector<K> g(s + 1, zero);
    g[s] = one;
    K two_inv = inverse(one + one);
    // coefficient of x^(n-t) in g^2 determines g[s-t]
    for (int t = 1; t <= s; ++t) {
        K acc = zero;
        for (int i = s - t + 1; i <= s; ++i) {
            int j = n - t - i;
            if (j >= s - t + 1 && j <= s && i > j) acc = acc + g[i] * g[j] + g[i] * g[j];
            else if (j == i) acc = acc + g[i] * g[j];
        }
        // 2*g[s]*g[s-t] + acc = f[n-t], g[s] = 1
        g[s - t] = (f.c[n - t] - acc) * two_inv;
    }
    UniPoly<K> cand{std::move(g)};
    if (cand * cand == f) return cand;
    return std::nullopt;
}

} // namespace kummerlab
