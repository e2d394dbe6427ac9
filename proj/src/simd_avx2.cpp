#if defined(__x86_64__) || defined(_M_X64)

#include "netcoop/simd.hpp"
#include <immintrin.h>

// AVX2 variants. Same lane protocol as the scalar reference: a __m256d
// accumulator keeps lane j = sum of elements 4g+j, the fold computes
// (l0+l2)+(l1+l3), tails run scalar in index order. _mm256_mul_pd followed by
// _mm256_add_pd (never FMA) so products and sums round exactly like the
// scalar code.

namespace netcoop::simd::avx2 {

static inline double fold(__m256d acc) {
    __m128d lo = _mm256_castpd256_pd128(acc);   // (l0, l1)
    __m128d hi = _mm256_extractf128_pd(acc, 1); // (l2, l3)
    __m128d s2 = _mm_add_pd(lo, hi);            // (l0+l2, l1+l3)
    return _mm_cvtsd_f64(s2) + _mm_cvtsd_f64(_mm_unpackhi_pd(s2, s2));
}

double reduce_add(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t n4 = n & ~std::size_t(3);
    for (std::size_t i = 0; i < n4; i += 4)
        acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
    double s = fold(acc);
    for (std::size_t i = n4; i < n; ++i) s += x[i];
    return s;
}

double gather_add(const double* x, const std::int32_t* idx, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t n4 = n & ~std::size_t(3);
    for (std::size_t i = 0; i < n4; i += 4) {
        __m128i vi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx + i));
        acc = _mm256_add_pd(acc, _mm256_i32gather_pd(x, vi, 8));
    }
    double s = fold(acc);
    for (std::size_t i = n4; i < n; ++i) s += x[idx[i]];
    return s;
}

double gather_sq_dev_add(const double* x, const std::int32_t* idx, std::size_t n, double mu) {
    __m256d acc = _mm256_setzero_pd();
    __m256d vmu = _mm256_set1_pd(mu);
    std::size_t n4 = n & ~std::size_t(3);
    for (std::size_t i = 0; i < n4; i += 4) {
        __m128i vi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx + i));
        __m256d d = _mm256_sub_pd(_mm256_i32gather_pd(x, vi, 8), vmu);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
    }
    double s = fold(acc);
    for (std::size_t i = n4; i < n; ++i) {
        double d = x[idx[i]] - mu;
        s += d * d;
    }
    return s;
}

std::int64_t gather_add_i32(const std::int32_t* v, const std::int32_t* idx, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t n8 = n & ~std::size_t(7);
    for (std::size_t i = 0; i < n8; i += 8) {
        __m256i vi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(idx + i));
        acc = _mm256_add_epi32(acc, _mm256_i32gather_epi32(v, vi, 4));
    }
    alignas(32) std::int32_t lanes[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::int64_t s = 0;
    for (int k = 0; k < 8; ++k) s += lanes[k];
    for (std::size_t i = n8; i < n; ++i) s += v[idx[i]];
    return s;
}

std::int64_t mismatch_count_u8(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
    std::int64_t c = 0;
    std::size_t n32 = n & ~std::size_t(31);
    for (std::size_t i = 0; i < n32; i += 32) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        unsigned eq = static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(va, vb)));
        c += 32 - __builtin_popcount(eq);
    }
    for (std::size_t i = n32; i < n; ++i) c += a[i] != b[i];
    return c;
}

std::int64_t ones_count_u8(const std::uint8_t* x, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    __m256i zero = _mm256_setzero_si256();
    std::size_t n32 = n & ~std::size_t(31);
    for (std::size_t i = 0; i < n32; i += 32) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(v, zero));
    }
    alignas(32) std::int64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::int64_t c = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (std::size_t i = n32; i < n; ++i) c += x[i];
    return c;
}

void min_max(const double* x, std::size_t n, double* mn, double* mx) {
    if (n < 4) {
        double lo = x[0], hi = x[0];
        for (std::size_t i = 1; i < n; ++i) {
            if (x[i] < lo) lo = x[i];
            if (x[i] > hi) hi = x[i];
        }
        *mn = lo;
        *mx = hi;
        return;
    }
    __m256d vlo = _mm256_loadu_pd(x);
    __m256d vhi = vlo;
    std::size_t n4 = n & ~std::size_t(3);
    for (std::size_t i = 4; i < n4; i += 4) {
        __m256d v = _mm256_loadu_pd(x + i);
        vlo = _mm256_min_pd(vlo, v);
        vhi = _mm256_max_pd(vhi, v);
    }
    alignas(32) double l[4], h[4];
    _mm256_store_pd(l, vlo);
    _mm256_store_pd(h, vhi);
    double lo = l[0], hi = h[0];
    for (int k = 1; k < 4; ++k) {
        if (l[k] < lo) lo = l[k];
        if (h[k] > hi) hi = h[k];
    }
    for (std::size_t i = n4; i < n; ++i) {
        if (x[i] < lo) lo = x[i];
        if (x[i] > hi) hi = x[i];
    }
    *mn = lo;
    *mx = hi;
}

} // namespace netcoop::simd::avx2

#endif
