#pragma once

// Detrending inner loops for DFA. Each kernel returns the sum of squared
// residuals of an order-m least-squares polynomial fit to y[0..L) against
// the centered segment-local coordinate u_t = t - (L-1)/2.
//
// Scalar versions are the reference; the AVX2/NEON variants are selected at
// runtime through active_backend() and must agree with the scalar kernels to
// ~1e-12 relative (they only reorder the floating-point accumulation).

#include <cstddef>
#include <optional>
#include <vector>

namespace zipfseq::kernels {

enum class Backend { scalar, avx2, neon };

const char* backend_name(Backend b);
bool backend_supported(Backend b);

/// Backend chosen for this process: the widest supported SIMD level, unless
/// pinned with force_backend.
Backend active_backend();

/// Pins the dispatch to one backend (tests, benchmarking). nullopt restores
/// autodetection. Throws if the backend is not supported on this CPU.
void force_backend(std::optional<Backend> b);

using SegmentRssFn = double (*)(const double* y, std::size_t len);

/// Kernel for linear (order-1) detrending, per the active backend.
SegmentRssFn segment_rss_order1();
/// Kernel for quadratic (order-2) detrending, per the active backend.
SegmentRssFn segment_rss_order2();

double segment_rss_order1_scalar(const double* y, std::size_t len);
double segment_rss_order2_scalar(const double* y, std::size_t len);
#if defined(__x86_64__) || defined(_M_X64)
double segment_rss_order1_avx2(const double* y, std::size_t len);
double segment_rss_order2_avx2(const double* y, std::size_t len);
#endif
#if defined(__aarch64__)
double segment_rss_order1_neon(const double* y, std::size_t len);
double segment_rss_order2_neon(const double* y, std::size_t len);
#endif

/// Generic-order detrending (scalar path, any order >= 1). Precomputes the
/// Cholesky factor of the Gram matrix of the scaled centered monomial basis
/// for one segment length, then rss() runs per segment.
class PolyDetrend {
public:
    PolyDetrend(std::size_t len, int order);
    double rss(const double* y) const;
    std::size_t length() const { return len_; }

private:
    std::size_t len_;
    int order_;
    double center_;
    double scale_;
    std::vector<double> chol_;  // lower triangle, row-major (order+1)^2
};

}  // namespace zipfseq::kernels
