// AVX2 variants of the character-sum kernels. Residues live in the four
// 64-bit lanes of a __m256i; products stay below 2^32 because the dispatch
// layer guarantees p < 2^16, so _mm256_mul_epu32 is exact and one Barrett
// step with M = floor(2^32 / p) leaves values in [0, 2p).

#include "kummerlab/charsum.hpp"

#if defined(KUMMERLAB_HAVE_AVX2)

#include <immintrin.h>

namespace kummerlab::charsum::detail {

namespace {

struct ModCtx {
    __m256i p;      // modulus splat
    __m256i barrett; // floor(2^32 / p) splat
};

inline ModCtx make_ctx(uint32_t p) {
    uint64_t m = (uint64_t(1) << 32) / p;
    return {_mm256_set1_epi64x(int64_t(p)), _mm256_set1_epi64x(int64_t(m))};
}

// v in [0, 2^32) -> v mod p. Barrett quotient is off by at most one, so a
// single conditional subtract finishes the job.
inline __m256i reduce(__m256i v, const ModCtx& m) {
    __m256i q = _mm256_srli_epi64(_mm256_mul_epu32(v, m.barrett), 32);
    __m256i r = _mm256_sub_epi64(v, _mm256_mul_epu32(q, m.p));
    __m256i ge = _mm256_cmpgt_epi64(m.p, r); // r < p ?
    return _mm256_blendv_epi8(_mm256_sub_epi64(r, m.p), r, ge);
}

inline __m256i mulmod(__m256i a, __m256i b, const ModCtx& m) {
    return reduce(_mm256_mul_epu32(a, b), m);
}

inline __m256i addmod(__m256i a, __m256i b, const ModCtx& m) {
    __m256i s = _mm256_add_epi64(a, b);
    __m256i lt = _mm256_cmpgt_epi64(m.p, s);
    return _mm256_blendv_epi8(_mm256_sub_epi64(s, m.p), s, lt);
}

inline uint64_t hsum(__m256i v) {
    alignas(32) uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
    return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

inline uint64_t scalar_tail_fp(std::span<const uint32_t> f, const ChiTable& t,
                               uint64_t from) {
    const uint64_t p = t.p;
    uint64_t count = 0;
    for (uint64_t x = from; x < p; ++x) {
        uint64_t v = 0;
        for (size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % p;
        count += t.weight[v];
    }
    return count;
}

} // namespace

uint64_t affine_count_fp_avx2(std::span<const uint32_t> f, const ChiTable& t) {
    const uint32_t p = t.p;
    const ModCtx m = make_ctx(p);
    const long long* weights = reinterpret_cast<const long long*>(t.weight.data());

    __m256i acc = _mm256_setzero_si256();
    __m256i x = _mm256_set_epi64x(3, 2, 1, 0);
    const __m256i step = _mm256_set1_epi64x(4);

    uint64_t xi = 0;
    for (; xi + 4 <= p; xi += 4) {
        __m256i v = _mm256_setzero_si256();
        for (size_t i = f.size(); i-- > 0;) {
            v = mulmod(v, x, m);
            v = addmod(v, _mm256_set1_epi64x(int64_t(f[i])), m);
        }
        acc = _mm256_add_epi64(acc, _mm256_i64gather_epi64(weights, v, 8));
        x = _mm256_add_epi64(x, step);
    }
    return hsum(acc) + scalar_tail_fp(f, t, xi);
}

uint64_t affine_count_fp2_avx2(std::span<const uint32_t> f, const ChiTable& t) {
    const uint32_t p = t.p;
    const uint64_t c = t.nonsquare;
    const ModCtx m = make_ctx(p);
    const __m256i c_s = _mm256_set1_epi64x(int64_t(c));
    const __m256i step = _mm256_set1_epi64x(4);
    const long long* weights = reinterpret_cast<const long long*>(t.weight.data());

    __m256i acc = _mm256_setzero_si256();
    uint64_t tail = 0;
    for (uint64_t x1i = 0; x1i < p; ++x1i) {
        const __m256i x1 = _mm256_set1_epi64x(int64_t(x1i));
        __m256i x0 = _mm256_set_epi64x(3, 2, 1, 0);
        uint64_t x0i = 0;
        for (; x0i + 4 <= p; x0i += 4) {
            __m256i v0 = _mm256_setzero_si256();
            __m256i v1 = _mm256_setzero_si256();
            for (size_t i = f.size(); i-- > 0;) {
                __m256i a = mulmod(v0, x0, m);
                __m256i bc = mulmod(mulmod(v1, x1, m), c_s, m);
                __m256i w1 = addmod(mulmod(v0, x1, m), mulmod(v1, x0, m), m);
                v0 = addmod(addmod(a, bc, m), _mm256_set1_epi64x(int64_t(f[i])), m);
                v1 = w1;
            }
            // norm = v0^2 - c v1^2; p - n2 is in (0, p], addmod absorbs it
            __m256i n2 = mulmod(mulmod(v1, v1, m), c_s, m);
            __m256i norm = addmod(mulmod(v0, v0, m), _mm256_sub_epi64(m.p, n2), m);
            acc = _mm256_add_epi64(acc, _mm256_i64gather_epi64(weights, norm, 8));
            x0 = _mm256_add_epi64(x0, step);
        }
        // remaining x0 lanes, scalar
        for (; x0i < p; ++x0i) {
            uint64_t v0 = 0, v1 = 0;
            for (size_t i = f.size(); i-- > 0;) {
                uint64_t w0 = (v0 * x0i + c * (v1 * x1i % p) + f[i]) % p;
                uint64_t w1 = (v0 * x1i + v1 * x0i) % p;
                v0 = w0;
                v1 = w1;
            }
            uint64_t norm = (v0 * v0 + (p - (c * (v1 * v1 % p) % p)) % p) % p;
            tail += t.weight[norm];
        }
    }
    return hsum(acc) + tail;
}

} // namespace kummerlab::charsum::detail

#endif // KUMMERLAB_HAVE_AVX2
