#include <cmath>
#include <cstddef>

#include "zipfseq/error.hpp"
#include "zipfseq/kernels.hpp"

namespace zipfseq::kernels {

// With the centered coordinate u_t = t - (L-1)/2 the first moments vanish
// (sum u = 0, sum u^3 = 0), so the order-1 and order-2 normal equations
// decouple into closed forms:
//
//   order 1: rss = Syy - Sy^2/L - Suy^2/Suu
//   order 2: rss = order-1 rss minus the projection onto p2 = u^2 - mean(u^2)

double segment_rss_order1_scalar(const double* y, std::size_t len) {
    const double n = static_cast<double>(len);
    const double c = 0.5 * (n - 1.0);
    double sy = 0.0, suy = 0.0, syy = 0.0;
    for (std::size_t t = 0; t < len; ++t) {
        const double u = static_cast<double>(t) - c;
        const double v = y[t];
        sy += v;
        suy += u * v;
        syy += v * v;
    }
    const double suu = n * (n * n - 1.0) / 12.0;
    const double rss = syy - sy * sy / n - suy * suy / suu;
    return rss > 0.0 ? rss : 0.0;
}

double segment_rss_order2_scalar(const double* y, std::size_t len) {
    const double n = static_cast<double>(len);
    const double c = 0.5 * (n - 1.0);
    const double m2 = (n * n - 1.0) / 12.0;  // mean of u^2
    double sy = 0.0, suy = 0.0, sqy = 0.0, syy = 0.0;
    for (std::size_t t = 0; t < len; ++t) {
        const double u = static_cast<double>(t) - c;
        const double q = u * u - m2;
        const double v = y[t];
        sy += v;
        suy += u * v;
        sqy += q * v;
        syy += v * v;
    }
    const double suu = n * (n * n - 1.0) / 12.0;
    // sum q^2 = sum u^4 - L * m2^2, with sum u^4 = L(L^2-1)(3L^2-7)/240
    const double sqq = n * (n * n - 1.0) * (3.0 * n * n - 7.0) / 240.0 - n * m2 * m2;
    const double rss = syy - sy * sy / n - suy * suy / suu - sqy * sqy / sqq;
    return rss > 0.0 ? rss : 0.0;
}

PolyDetrend::PolyDetrend(std::size_t len, int order) : len_(len), order_(order) {
    if (order < 1) throw Error("detrend order must be >= 1");
    if (len < static_cast<std::size_t>(order) + 2)
        throw Error("segment too short for detrend order");
    center_ = 0.5 * (static_cast<double>(len) - 1.0);
    scale_ = center_ > 0.0 ? 1.0 / center_ : 1.0;

    // Gram matrix G[i][j] = sum_t u^(i+j) over the scaled centered coordinate
    // (|u| <= 1 keeps it well conditioned for small orders).
    const int dim = order + 1;
    std::vector<double> power_sum(2 * order + 1, 0.0);
    for (std::size_t t = 0; t < len; ++t) {
        const double u = (static_cast<double>(t) - center_) * scale_;
        double p = 1.0;
        for (int e = 0; e <= 2 * order; ++e) {
            power_sum[e] += p;
            p *= u;
        }
    }
    std::vector<double> gram(dim * dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) gram[i * dim + j] = power_sum[i + j];

    // In-place Cholesky, lower triangle.
    chol_.assign(dim * dim, 0.0);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j <= i; ++j) {
            double s = gram[i * dim + j];
            for (int k = 0; k < j; ++k) s -= chol_[i * dim + k] * chol_[j * dim + k];
            if (i == j) {
                if (s <= 0.0) throw Error("detrend basis degenerate");
                chol_[i * dim + i] = std::sqrt(s);
            } else {
                chol_[i * dim + j] = s / chol_[j * dim + j];
            }
        }
    }
}

double PolyDetrend::rss(const double* y) const {
    const int dim = order_ + 1;
    double b[16];  // order capped well below this by callers
    for (int i = 0; i < dim; ++i) b[i] = 0.0;
    double syy = 0.0;
    for (std::size_t t = 0; t < len_; ++t) {
        const double u = (static_cast<double>(t) - center_) * scale_;
        const double v = y[t];
        double p = v;
        for (int e = 0; e < dim; ++e) {
            b[e] += p;
            p *= u;
        }
        syy += v * v;
    }
    // rss = Syy - b^T G^{-1} b via two triangular solves; with G = R R^T the
    // projection equals |R^{-1} b|^2.
    double w[16];
    for (int i = 0; i < dim; ++i) {
        double s = b[i];
        for (int k = 0; k < i; ++k) s -= chol_[i * dim + k] * w[k];
        w[i] = s / chol_[i * dim + i];
    }
    double proj = 0.0;
    for (int i = 0; i < dim; ++i) proj += w[i] * w[i];
    const double rss = syy - proj;
    return rss > 0.0 ? rss : 0.0;
}

}  // namespace zipfseq::kernels
