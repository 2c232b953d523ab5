// NEON segment detrending kernels (aarch64). Mirrors the AVX2 variants with
// 2-wide float64 lanes.

#if defined(__aarch64__)

#include <arm_neon.h>

#include <cstddef>

#include "zipfseq/kernels.hpp"

namespace zipfseq::kernels {

double segment_rss_order1_neon(const double* y, std::size_t len) {
    const double n = static_cast<double>(len);
    const double c = 0.5 * (n - 1.0);

    float64x2_t sy = vdupq_n_f64(0.0);
    float64x2_t suy = vdupq_n_f64(0.0);
    float64x2_t syy = vdupq_n_f64(0.0);
    const double u0[2] = {-c, 1.0 - c};
    float64x2_t u = vld1q_f64(u0);
    const float64x2_t two = vdupq_n_f64(2.0);

    std::size_t t = 0;
    for (; t + 2 <= len; t += 2) {
        const float64x2_t v = vld1q_f64(y + t);
        sy = vaddq_f64(sy, v);
        suy = vfmaq_f64(suy, u, v);
        syy = vfmaq_f64(syy, v, v);
        u = vaddq_f64(u, two);
    }
    double s1 = vgetq_lane_f64(sy, 0) + vgetq_lane_f64(sy, 1);
    double s2 = vgetq_lane_f64(suy, 0) + vgetq_lane_f64(suy, 1);
    double s3 = vgetq_lane_f64(syy, 0) + vgetq_lane_f64(syy, 1);
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

double segment_rss_order2_neon(const double* y, std::size_t len) {
    const double n = static_cast<double>(len);
    const double c = 0.5 * (n - 1.0);
    const double m2 = (n * n - 1.0) / 12.0;

    float64x2_t sy = vdupq_n_f64(0.0);
    float64x2_t suy = vdupq_n_f64(0.0);
    float64x2_t sqy = vdupq_n_f64(0.0);
    float64x2_t syy = vdupq_n_f64(0.0);
    const double u0[2] = {-c, 1.0 - c};
    float64x2_t u = vld1q_f64(u0);
    const float64x2_t two = vdupq_n_f64(2.0);
    const float64x2_t mean2 = vdupq_n_f64(m2);

    std::size_t t = 0;
    for (; t + 2 <= len; t += 2) {
        const float64x2_t v = vld1q_f64(y + t);
        const float64x2_t q = vsubq_f64(vmulq_f64(u, u), mean2);
        sy = vaddq_f64(sy, v);
        suy = vfmaq_f64(suy, u, v);
        sqy = vfmaq_f64(sqy, q, v);
        syy = vfmaq_f64(syy, v, v);
        u = vaddq_f64(u, two);
    }
    double s1 = vgetq_lane_f64(sy, 0) + vgetq_lane_f64(sy, 1);
    double s2 = vgetq_lane_f64(suy, 0) + vgetq_lane_f64(suy, 1);
    double s4 = vgetq_lane_f64(sqy, 0) + vgetq_lane_f64(sqy, 1);
    double s3 = vgetq_lane_f64(syy, 0) + vgetq_lane_f64(syy, 1);
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

#endif  // __aarch64__
