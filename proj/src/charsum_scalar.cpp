// Reference kernels. Deliberately plain: these define the semantics the
// SIMD variants are tested against.

#include "kummerlab/charsum.hpp"

namespace kummerlab::charsum::detail {

uint64_t affine_count_fp_scalar(std::span<const uint32_t> f, const ChiTable& t) {
    const uint64_t p = t.p;
    uint64_t count = 0;
    for (uint64_t x = 0; x < p; ++x) {
        uint64_t v = 0;
        for (size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % p;
        count += t.weight[v];
    }
    return count;
}

uint64_t affine_count_fp2_scalar(std::span<const uint32_t> f, const ChiTable& t) {
    const uint64_t p = t.p;
    const uint64_t c = t.nonsquare;
    uint64_t count = 0;
    for (uint64_t x1 = 0; x1 < p; ++x1) {
        for (uint64_t x0 = 0; x0 < p; ++x0) {
            // Horner over F_p[t]/(t^2 - c): v = v*x + f_i
            uint64_t v0 = 0, v1 = 0;
            for (size_t i = f.size(); i-- > 0;) {
                uint64_t w0 = (v0 * x0 + c * (v1 * x1 % p) + f[i]) % p;
                uint64_t w1 = (v0 * x1 + v1 * x0) % p;
                v0 = w0;
                v1 = w1;
            }
            // chi_{p^2}(v) = chi_p(v0^2 - c v1^2)
            uint64_t norm = (v0 * v0 + (p - (c * (v1 * v1 % p) % p)) % p) % p;
            count += t.weight[norm];
        }
    }
    return count;
}

} // namespace kummerlab::charsum::detail
