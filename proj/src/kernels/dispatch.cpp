#include <atomic>
#include <optional>

#include "zipfseq/error.hpp"
#include "zipfseq/kernels.hpp"

namespace zipfseq::kernels {

namespace {

Backend detect() {
#if defined(__x86_64__) || defined(_M_X64)
#if defined(__GNUC__) || defined(__clang__)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
        return Backend::avx2;
#endif
#elif defined(__aarch64__)
    return Backend::neon;  // NEON is baseline on aarch64
#endif
    return Backend::scalar;
}

std::optional<Backend>& forced() {
    static std::optional<Backend> f;
    return f;
}

}  // namespace

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
        case Backend::neon: return "neon";
    }
    return "?";
}

bool backend_supported(Backend b) {
    if (b == Backend::scalar) return true;
    return b == detect();
}

Backend active_backend() {
    if (forced().has_value()) return *forced();
    static const Backend detected = detect();
    return detected;
}

void force_backend(std::optional<Backend> b) {
    if (b.has_value() && !backend_supported(*b))
        throw Error(std::string("kernel backend not supported on this CPU: ") +
                    backend_name(*b));
    forced() = b;
}

SegmentRssFn segment_rss_order1() {
    switch (active_backend()) {
#if defined(__x86_64__) || defined(_M_X64)
        case Backend::avx2: return &segment_rss_order1_avx2;
#endif
#if defined(__aarch64__)
        case Backend::neon: return &segment_rss_order1_neon;
#endif
        default: return &segment_rss_order1_scalar;
    }
}

SegmentRssFn segment_rss_order2() {
    switch (active_backend()) {
#if defined(__x86_64__) || defined(_M_X64)
        case Backend::avx2: return &segment_rss_order2_avx2;
#endif
#if defined(__aarch64__)
        case Backend::neon: return &segment_rss_order2_neon;
#endif
        default: return &segment_rss_order2_scalar;
    }
}

}  // namespace zipfseq::kernels
