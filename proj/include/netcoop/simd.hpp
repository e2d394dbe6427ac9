#pragma once
#include <cstddef>
#include <cstdint>

// Kernels for the inner loops: reductions, CSR gathers, popcounts, min/max.
// Every kernel has a scalar reference implementation and vector variants
// (AVX2, NEON) selected once at startup from cpuid / compile target, with an
// env override (NETCOOP_SIMD=scalar|avx2|neon) and a programmatic override
// for the equivalence tests.
//
// All backends are bit-exact against the scalar reference. Floating-point
// kernels follow one canonical accumulation order: four independent lanes,
// lane j sums elements 4g+j, folded as (l0+l2)+(l1+l3), then the remaining
// tail elements added one by one in index order. The scalar reference
// implements exactly this order, so vector variants don't merely approximate
// it — they compute the same doubles. Integer kernels are order-free.

namespace netcoop::simd {

enum class Backend { Scalar, Avx2, Neon };

Backend active_backend();
void set_backend(Backend b);       // throws if unsupported on this CPU
bool backend_supported(Backend b);
const char* backend_name(Backend b);

// sum of x[0..n)
double reduce_add(const double* x, std::size_t n);
// sum of x[idx[0..n)]
double gather_add(const double* x, const std::int32_t* idx, std::size_t n);
// sum of (x[idx[k]] - mu)^2
double gather_sq_dev_add(const double* x, const std::int32_t* idx, std::size_t n, double mu);
// sum of v[idx[0..n)] for small nonnegative ints (strategy vectors)
std::int64_t gather_add_i32(const std::int32_t* v, const std::int32_t* idx, std::size_t n);
// number of positions where a != b
std::int64_t mismatch_count_u8(const std::uint8_t* a, const std::uint8_t* b, std::size_t n);
// sum of bytes (strategy vectors hold 0/1)
std::int64_t ones_count_u8(const std::uint8_t* x, std::size_t n);
// elementwise min and max of x[0..n); undefined for n = 0
void min_max(const double* x, std::size_t n, double* mn, double* mx);

// per-backend entry points (exposed so the tests can pit them against each other)
namespace scalar {
double reduce_add(const double* x, std::size_t n);
double gather_add(const double* x, const std::int32_t* idx, std::size_t n);
double gather_sq_dev_add(const double* x, const std::int32_t* idx, std::size_t n, double mu);
std::int64_t gather_add_i32(const std::int32_t* v, const std::int32_t* idx, std::size_t n);
std::int64_t mismatch_count_u8(const std::uint8_t* a, const std::uint8_t* b, std::size_t n);
std::int64_t ones_count_u8(const std::uint8_t* x, std::size_t n);
void min_max(const double* x, std::size_t n, double* mn, double* mx);
}

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
double reduce_add(const double* x, std::size_t n);
double gather_add(const double* x, const std::int32_t* idx, std::size_t n);
double gather_sq_dev_add(const double* x, const std::int32_t* idx, std::size_t n, double mu);
std::int64_t gather_add_i32(const std::int32_t* v, const std::int32_t* idx, std::size_t n);
std::int64_t mismatch_count_u8(const std::uint8_t* a, const std::uint8_t* b, std::size_t n);
std::int64_t ones_count_u8(const std::uint8_t* x, std::size_t n);
void min_max(const double* x, std::size_t n, double* mn, double* mx);
}
#endif

#if defined(__ARM_NEON) && defined(__aarch64__)
namespace neon {
double reduce_add(const double* x, std::size_t n);
double gather_add(const double* x, const std::int32_t* idx, std::size_t n);
double gather_sq_dev_add(const double* x, const std::int32_t* idx, std::size_t n, double mu);
std::int64_t gather_add_i32(const std::int32_t* v, const std::int32_t* idx, std::size_t n);
std::int64_t mismatch_count_u8(const std::uint8_t* a, const std::uint8_t* b, std::size_t n);
std::int64_t ones_count_u8(const std::uint8_t* x, std::size_t n);
void min_max(const double* x, std::size_t n, double* mn, double* mx);
}
#endif

} // namespace netcoop::simd
