#if defined(__ARM_NEON) && defined(__aarch64__)

#include "netcoop/simd.hpp"
#include <arm_neon.h>

// NEON variants (aarch64: float64x2). Two 128-bit accumulators play the four
// canonical lanes: acc01 holds lanes 0,1 and acc23 holds lanes 2,3, so the
// fold vaddq(acc01, acc23) -> lane0 + lane1 reproduces (l0+l2)+(l1+l3)
// exactly. There is no NEON gather; gathered lanes are loaded scalar but
// accumulated in the same lane positions. No vfmaq: mul then add, matching
// scalar rounding.

namespace netcoop::simd::neon {

static inline double fold(float64x2_t acc01, float64x2_t acc23) {
    float64x2_t s2 = vaddq_f64(acc01, acc23); // (l0+l2, l1+l3)
    return vgetq_lane_f64(s2, 0) + vgetq_lane_f64(s2, 1);
}

double reduce_add(const double* x, std::size_t n) {
    float64x2_t acc01 = vdupq_n_f64(0.0), acc23 = vdupq_n_f64(0.0);
    std::size_t n4 = n & ~std::size_t(3);
    for (std::size_t i = 0; i < n4; i += 4) {
        acc01 = vaddq_f64(acc01, vld1q_f64(x + i));
        acc23 = vaddq_f64(acc23, vld1q_f64(x + i + 2));
    }
    double s = fold(acc01, acc23);
    for (std::size_t i = n4; i < n; ++i) s += x[i];
    return s;
}

double gather_add(const double* x, const std::int32_t* idx, std::size_t n) {
    float64x2_t acc01 = vdupq_n_f64(0.0), acc23 = vdupq_n_f64(0.0);
    std::size_t n4 = n & ~std::size_t(3);
    for (std::size_t i = 0; i < n4; i += 4) {
        double g01[2] = {x[idx[i]], x[idx[i + 1]]};
        double g23[2] = {x[idx[i + 2]], x[idx[i + 3]]};
        acc01 = vaddq_f64(acc01, vld1q_f64(g01));
        acc23 = vaddq_f64(acc23, vld1q_f64(g23));
    }
    double s = fold(acc01, acc23);
    for (std::size_t i = n4; i < n; ++i) s += x[idx[i]];
    return s;
}

double gather_sq_dev_add(const double* x, const std::int32_t* idx, std::size_t n, double mu) {
    float64x2_t acc01 = vdupq_n_f64(0.0), acc23 = vdupq_n_f64(0.0);
    float64x2_t vmu = vdupq_n_f64(mu);
    std::size_t n4 = n & ~std::size_t(3);
    for (std::size_t i = 0; i < n4; i += 4) {
        double g01[2] = {x[idx[i]], x[idx[i + 1]]};
        double g23[2] = {x[idx[i + 2]], x[idx[i + 3]]};
        float64x2_t d01 = vsubq_f64(vld1q_f64(g01), vmu);
        float64x2_t d23 = vsubq_f64(vld1q_f64(g23), vmu);
        acc01 = vaddq_f64(acc01, vmulq_f64(d01, d01));
        acc23 = vaddq_f64(acc23, vmulq_f64(d23, d23));
    }
    double s = fold(acc01, acc23);
    for (std::size_t i = n4; i < n; ++i) {
        double d = x[idx[i]] - mu;
        s += d * d;
    }
    return s;
}

std::int64_t gather_add_i32(const std::int32_t* v, const std::int32_t* idx, std::size_t n) {
    int32x4_t acc = vdupq_n_s32(0);
    std::size_t n4 = n & ~std::size_t(3);
    for (std::size_t i = 0; i < n4; i += 4) {
        std::int32_t g[4] = {v[idx[i]], v[idx[i + 1]], v[idx[i + 2]], v[idx[i + 3]]};
        acc = vaddq_s32(acc, vld1q_s32(g));
    }
    std::int64_t s = vaddlvq_s32(acc);
    for (std::size_t i = n4; i < n; ++i) s += v[idx[i]];
    return s;
}

std::int64_t mismatch_count_u8(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
    std::int64_t c = 0;
    uint8x16_t one = vdupq_n_u8(1);
    std::size_t n16 = n & ~std::size_t(15);
    for (std::size_t i = 0; i < n16; i += 16) {
        uint8x16_t ne = vmvnq_u8(vceqq_u8(vld1q_u8(a + i), vld1q_u8(b + i)));
        c += vaddlvq_u8(vandq_u8(ne, one));
    }
    for (std::size_t i = n16; i < n; ++i) c += a[i] != b[i];
    return c;
}

std::int64_t ones_count_u8(const std::uint8_t* x, std::size_t n) {
    std::int64_t c = 0;
    std::size_t n16 = n & ~std::size_t(15);
    for (std::size_t i = 0; i < n16; i += 16)
        c += vaddlvq_u8(vld1q_u8(x + i));
    for (std::size_t i = n16; i < n; ++i) c += x[i];
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
    float64x2_t vlo = vld1q_f64(x), vhi = vlo;
    float64x2_t vlo2 = vld1q_f64(x + 2), vhi2 = vlo2;
    std::size_t n4 = n & ~std::size_t(3);
    for (std::size_t i = 4; i < n4; i += 4) {
        float64x2_t a = vld1q_f64(x + i), b = vld1q_f64(x + i + 2);
        vlo = vminq_f64(vlo, a);
        vhi = vmaxq_f64(vhi, a);
        vlo2 = vminq_f64(vlo2, b);
        vhi2 = vmaxq_f64(vhi2, b);
    }
    vlo = vminq_f64(vlo, vlo2);
    vhi = vmaxq_f64(vhi, vhi2);
    double lo = vgetq_lane_f64(vlo, 0), hi = vgetq_lane_f64(vhi, 0);
    if (vgetq_lane_f64(vlo, 1) < lo) lo = vgetq_lane_f64(vlo, 1);
    if (vgetq_lane_f64(vhi, 1) > hi) hi = vgetq_lane_f64(vhi, 1);
    for (std::size_t i = n4; i < n; ++i) {
        if (x[i] < lo) lo = x[i];
        if (x[i] > hi) hi = x[i];
    }
    *mn = lo;
    *mx = hi;
}

} // namespace netcoop::simd::neon

#endif
