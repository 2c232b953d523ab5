// AVX2 + FMA segment detrending kernels. Translation unit compiled with
// -mavx2 -mfma; callers reach it only through the runtime dispatch.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cstddef>

#include "zipfseq/kernels.hpp"

namespace zipfseq::kernels {

namespace {

// Fixed reduction order so results are reproducible run to run.
inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(s) + _mm_cvtsd_f64(_mm_unpackhi_pd(s, s));
}

}  // namespace

double segment_rss_order1_avx2(const double* y, std::size_t len) {
    const double n = static_cast<double>(len);
    const double c = 0.5 * (n - 1.0);

    __m256d sy = _mm256_setzero_pd();
    __m256d suy = _mm256_setzero_pd();
    __m256d syy = _mm256_setzero_pd();
    __m256d u = _mm256_sub_pd(_mm256_set_pd(3.0, 2.0, 1.0, 0.0), _mm256_set1_pd(c));
    const __m256d four = _mm256_set1_pd(4.0);

    std::size_t t = 0;
    for (; t + 4 <= len; t += 4) {
        const __m256d v = _mm256_loadu_pd(y + t);
        sy = _mm256_add_pd(sy, v);
        suy = _mm256_fmadd_pd(u, v, suy);
        syy = _mm256_fmadd_pd(v, v, syy);
        u = _mm256_add_pd(u, four);
    }
    double s1 = hsum(sy), s2 = hsum(suy), s3 = hsum(syy);
    for (; t < len; ++t) {
        const double uu = static_cast<double>(t) - c;
        const double v = y[t];
        s1 += v;
        s2 += uu * v;
        s3 += v * v;
    }

    const double suu = n * (n * n - 1.0) / 12.0;
    const double rss = s3 - s1 * s1 / n - s2 * s2 / suu;
    return rss > 0.0 ? rss : 0.0;
}

double segment_rss_order2_avx2(const double* y, std::size_t len) {
    const double n = static_cast<double>(len);
    const double c = 0.5 * (n - 1.0);
    const double m2 = (n * n - 1.0) / 12.0;

    __m256d sy = _mm256_setzero_pd();
    __m256d suy = _mm256_setzero_pd();
    __m256d sqy = _mm256_setzero_pd();
    __m256d syy = _mm256_setzero_pd();
    __m256d u = _mm256_sub_pd(_mm256_set_pd(3.0, 2.0, 1.0, 0.0), _mm256_set1_pd(c));
    const __m256d four = _mm256_set1_pd(4.0);
    const __m256d mean2 = _mm256_set1_pd(m2);

    std::size_t t = 0;
    for (; t + 4 <= len; t += 4) {
        const __m256d v = _mm256_loadu_pd(y + t);
        const __m256d q = _mm256_fmsub_pd(u, u, mean2);
        sy = _mm256_add_pd(sy, v);
        suy = _mm256_fmadd_pd(u, v, suy);
        sqy = _mm256_fmadd_pd(q, v, sqy);
        syy = _mm256_fmadd_pd(v, v, syy);
        u = _mm256_add_pd(u, four);
    }
    double s1 = hsum(sy), s2 = hsum(suy), s4 = hsum(sqy), s3 = hsum(syy);
    for (; t < len; ++t) {
        const double uu = static_cast<double>(t) - c;
        const double v = y[t];
        s1 += v;
        s2 += uu * v;
        s4 += (uu * uu - m2) * v;
        s3 += v * v;
    }

    const double suu = n * (n * n - 1.0) / 12.0;
    const double sqq = n * (n * n - 1.0) * (3.0 * n * n - 7.0) / 240.0 - n * m2 * m2;
    const double rss = s3 - s1 * s1 / n - s2 * s2 / suu - s4 * s4 / sqq;
    return rss > 0.0 ? rss : 0.0;
}

}  // namespace zipfseq::kernels

#endif  // x86_64
