#include "netcoop/simd.hpp"

// Scalar reference. The 4-lane structure is not an optimization here; it IS
// the contract. Vector backends reproduce these exact operations.

namespace netcoop::simd::scalar {

double reduce_add(const double* x, std::size_t n) {
    double l0 = 0, l1 = 0, l2 = 0, l3 = 0;
    std::size_t n4 = n & ~std::size_t(3);
    for (std::size_t i = 0; i < n4; i += 4) {
        l0 += x[i];
        l1 += x[i + 1];
        l2 += x[i + 2];
        l3 += x[i + 3];
    }
    double s = (l0 + l2) + (l1 + l3);
    for (std::size_t i = n4; i < n; ++i) s += x[i];
    return s;
}

double gather_add(const double* x, const std::int32_t* idx, std::size_t n) {
    double l0 = 0, l1 = 0, l2 = 0, l3 = 0;
    std::size_t n4 = n & ~std::size_t(3);
    for (std::size_t i = 0; i < n4; i += 4) {
        l0 += x[idx[i]];
        l1 += x[idx[i + 1]];
        l2 += x[idx[i + 2]];
        l3 += x[idx[i + 3]];
    }
    double s = (l0 + l2) + (l1 + l3);
    for (std::size_t i = n4; i < n; ++i) s += x[idx[i]];
    return s;
}

double gather_sq_dev_add(const double* x, const std::int32_t* idx, std::size_t n, double mu) {
    double l0 = 0, l1 = 0, l2 = 0, l3 = 0;
    std::size_t n4 = n & ~std::size_t(3);
    for (std::size_t i = 0; i < n4; i += 4) {
        double d0 = x[idx[i]] - mu;
        double d1 = x[idx[i + 1]] - mu;
        double d2 = x[idx[i + 2]] - mu;
        double d3 = x[idx[i + 3]] - mu;
        l0 += d0 * d0;
        l1 += d1 * d1;
        l2 += d2 * d2;
        l3 += d3 * d3;
    }
    double s = (l0 + l2) + (l1 + l3);
    for (std::size_t i = n4; i < n; ++i) {
        double d = x[idx[i]] - mu;
        s += d * d;
    }
    return s;
}

std::int64_t gather_add_i32(const std::int32_t* v, const std::int32_t* idx, std::size_t n) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n; ++i) s += v[idx[i]];
    return s;
}

std::int64_t mismatch_count_u8(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
    std::int64_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += a[i] != b[i];
    return c;
}

std::int64_t ones_count_u8(const std::uint8_t* x, std::size_t n) {
    std::int64_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += x[i];
    return c;
}

void min_max(const double* x, std::size_t n, double* mn, double* mx) {
    double lo = x[0], hi = x[0];
    for (std::size_t i = 1; i < n; ++i) {
        if (x[i] < lo) lo = x[i];
        if (x[i] > hi) hi = x[i];
    }
    *mn = lo;
    *mx = hi;
}

} // namespace netcoop::simd::scalar
