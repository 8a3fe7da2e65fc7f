#include "kummerlab/charsum.hpp"

#include <stdexcept>

#include "kummerlab/fp.hpp"

namespace kummerlab::charsum {

ChiTable build_chi_table(uint32_t p) {
    validate_odd_prime(p);
    ChiTable t;
    t.p = p;
    t.chi.assign(p, -1);
    t.chi[0] = 0;
    for (uint64_t i = 1; i <= (p - 1) / 2; ++i) t.chi[i * i % p] = 1;
    t.weight.assign(p, 0);
    for (uint32_t v = 0; v < p; ++v) t.weight[v] = static_cast<uint64_t>(1 + t.chi[v]);
    t.nonsquare = 0;
    for (uint32_t c = 2; c < p; ++c)
        if (t.chi[c] == -1) { t.nonsquare = c; break; }
    if (t.nonsquare == 0) throw std::invalid_argument("no nonsquare mod p; p prime?");
    return t;
}

bool avx2_available() {
#if defined(KUMMERLAB_HAVE_AVX2)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

// The AVX2 kernels keep all residues in 64-bit lanes with 32-bit Barrett
// reduction, which needs p < 2^16. Larger moduli take the scalar path.
Backend resolve_backend(Backend requested, uint32_t p) {
    switch (requested) {
    case Backend::Scalar: return Backend::Scalar;
    case Backend::Avx2:
        if (!avx2_available()) throw std::runtime_error("avx2 backend unavailable on this host");
        if (p >= (1u << 16)) throw std::invalid_argument("avx2 kernels require p < 2^16");
        return Backend::Avx2;
    case Backend::Auto:
        return (avx2_available() && p < (1u << 16)) ? Backend::Avx2 : Backend::Scalar;
    }
    return Backend::Scalar;
}

uint64_t affine_count_fp(std::span<const uint32_t> f, const ChiTable& t, Backend backend) {
    if (f.empty()) throw std::invalid_argument("empty coefficient vector");
    for (uint32_t c : f)
        if (c >= t.p) throw std::invalid_argument("coefficient not reduced mod p");
    switch (resolve_backend(backend, t.p)) {
#if defined(KUMMERLAB_HAVE_AVX2)
    case Backend::Avx2: return detail::affine_count_fp_avx2(f, t);
#endif
    default: return detail::affine_count_fp_scalar(f, t);
    }
}

uint64_t affine_count_fp2(std::span<const uint32_t> f, const ChiTable& t, Backend backend) {
    if (f.empty()) throw std::invalid_argument("empty coefficient vector");
    for (uint32_t c : f)
        if (c >= t.p) throw std::invalid_argument("coefficient not reduced mod p");
    switch (resolve_backend(backend, t.p)) {
#if defined(KUMMERLAB_HAVE_AVX2)
    case Backend::Avx2: return detail::affine_count_fp2_avx2(f, t);
#endif
    default: return detail::affine_count_fp2_scalar(f, t);
    }
}

} // namespace kummerlab::charsum
