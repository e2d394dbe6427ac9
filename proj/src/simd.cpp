#include "netcoop/simd.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace netcoop::simd {

namespace {

struct Vtable {
    double (*reduce_add)(const double*, std::size_t);
    double (*gather_add)(const double*, const std::int32_t*, std::size_t);
    double (*gather_sq_dev_add)(const double*, const std::int32_t*, std::size_t, double);
    std::int64_t (*gather_add_i32)(const std::int32_t*, const std::int32_t*, std::size_t);
    std::int64_t (*mismatch_count_u8)(const std::uint8_t*, const std::uint8_t*, std::size_t);
    std::int64_t (*ones_count_u8)(const std::uint8_t*, std::size_t);
    void (*min_max)(const double*, std::size_t, double*, double*);
};

constexpr Vtable kScalar = {
    scalar::reduce_add, scalar::gather_add, scalar::gather_sq_dev_add,
    scalar::gather_add_i32, scalar::mismatch_count_u8, scalar::ones_count_u8,
    scalar::min_max,
};

#if defined(__x86_64__) || defined(_M_X64)
constexpr Vtable kAvx2 = {
    avx2::reduce_add, avx2::gather_add, avx2::gather_sq_dev_add,
    avx2::gather_add_i32, avx2::mismatch_count_u8, avx2::ones_count_u8,
    avx2::min_max,
};
#endif

#if defined(__ARM_NEON) && defined(__aarch64__)
constexpr Vtable kNeon = {
    neon::reduce_add, neon::gather_add, neon::gather_sq_dev_add,
    neon::gather_add_i32, neon::mismatch_count_u8, neon::ones_count_u8,
    neon::min_max,
};
#endif

const Vtable* table_for(Backend b) {
    switch (b) {
        case Backend::Scalar: return &kScalar;
#if defined(__x86_64__) || defined(_M_X64)
        case Backend::Avx2: return &kAvx2;
#endif
#if defined(__ARM_NEON) && defined(__aarch64__)
        case Backend::Neon: return &kNeon;
#endif
        default: return nullptr;
    }
}

Backend detect() {
    if (const char* env = std::getenv("NETCOOP_SIMD")) {
        std::string s(env);
        if (s == "scalar") return Backend::Scalar;
        if (s == "avx2" && backend_supported(Backend::Avx2)) return Backend::Avx2;
        if (s == "neon" && backend_supported(Backend::Neon)) return Backend::Neon;
        // unknown or unsupported request: fall through to autodetect
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2")) return Backend::Avx2;
#endif
#if defined(__ARM_NEON) && defined(__aarch64__)
    return Backend::Neon;
#endif
    return Backend::Scalar;
}

const Vtable* g_active = table_for(detect());
Backend g_backend = detect();

} // namespace

bool backend_supported(Backend b) {
    switch (b) {
        case Backend::Scalar: return true;
        case Backend::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return __builtin_cpu_supports("avx2") != 0;
#else
            return false;
#endif
        case Backend::Neon:
#if defined(__ARM_NEON) && defined(__aarch64__)
            return true;
#else
            return false;
#endif
    }
    return false;
}

Backend active_backend() { return g_backend; }

void set_backend(Backend b) {
    if (!backend_supported(b))
        throw std::runtime_error(std::string("simd backend not supported on this CPU: ") + backend_name(b));
    g_backend = b;
    g_active = table_for(b);
}

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
        case Backend::Neon: return "neon";
    }
    return "?";
}

double reduce_add(const double* x, std::size_t n) { return g_active->reduce_add(x, n); }
double gather_add(const double* x, const std::int32_t* idx, std::size_t n) { return g_active->gather_add(x, idx, n); }
double gather_sq_dev_add(const double* x, const std::int32_t* idx, std::size_t n, double mu) { return g_active->gather_sq_dev_add(x, idx, n, mu); }
std::int64_t gather_add_i32(const std::int32_t* v, const std::int32_t* idx, std::size_t n) { return g_active->gather_add_i32(v, idx, n); }
std::int64_t mismatch_count_u8(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) { return g_active->mismatch_count_u8(a, b, n); }
std::int64_t ones_count_u8(const std::uint8_t* x, std::size_t n) { return g_active->ones_count_u8(x, n); }
void min_max(const double* x, std::size_t n, double* mn, double* mx) { g_active->min_max(x, n, mn, mx); }

} // namespace netcoop::simd
