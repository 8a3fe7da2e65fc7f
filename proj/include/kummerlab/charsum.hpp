#pragma once

// Affine point-count kernels for hyperelliptic models y^2 = f(x): the count
// over F_{p^k} is a quadratic-character sum, sum_x (1 + chi(f(x))). This is
// the one data-parallel inner loop in the toolkit, so it comes in two
// equivalence-tested variants: a scalar reference and an AVX2 kernel picked
// at runtime. Results are exact integers either way.

#include <cstdint>
#include <span>
#include <vector>

namespace kummerlab::charsum {

enum class Backend { Auto, Scalar, Avx2 };

struct ChiTable {
    uint32_t p = 0;
    uint32_t nonsquare = 0;       // least c with chi(c) = -1
    std::vector<int8_t> chi;      // chi[v] in {-1, 0, +1}
    std::vector<uint64_t> weight; // weight[v] = 1 + chi[v], the y-count for y^2 = v
};

// O(p) squares sieve; p must be an odd prime (validated by the caller).
ChiTable build_chi_table(uint32_t p);

bool avx2_available();
Backend resolve_backend(Backend requested, uint32_t p);

// #{(x, y) in F_p^2 : y^2 = f(x)}. Coefficients ascending, reduced mod p.
uint64_t affine_count_fp(std::span<const uint32_t> f, const ChiTable& t,
                         Backend backend = Backend::Auto);

// #{(x, y) in F_{p^2}^2 : y^2 = f(x)} with F_{p^2} = F_p[t]/(t^2 - c) for the
// table's nonsquare c; chi_{p^2}(v) = chi_p(Norm v). p^2 iterations.
uint64_t affine_count_fp2(std::span<const uint32_t> f, const ChiTable& t,
                          Backend backend = Backend::Auto);

// Internal entry points (exposed for the equivalence tests).
namespace detail {
uint64_t affine_count_fp_scalar(std::span<const uint32_t> f, const ChiTable& t);
uint64_t affine_count_fp2_scalar(std::span<const uint32_t> f, const ChiTable& t);
#if defined(KUMMERLAB_HAVE_AVX2)
uint64_t affine_count_fp_avx2(std::span<const uint32_t> f, const ChiTable& t);
uint64_t affine_count_fp2_avx2(std::span<const uint32_t> f, const ChiTable& t);
#endif
} // namespace detail

} // namespace kummerlab::charsum
