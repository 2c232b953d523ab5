#include "zipfseq/fgn.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <thread>
#include <vector>

#include "zipfseq/fft.hpp"
#include "zipfseq/rng.hpp"

namespace zipfseq {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void validate(const FgnConfig& cfg) {
    if (cfg.n < 2) throw Error("fgn: length must be >= 2");
    if (!(cfg.alpha0 > 0.0) || !(cfg.alpha0 < 1.0))
        throw Error("fgn: alpha0 must be in (0, 1)");
}

// Rescales to sample mean 0 and (population) variance 1.
void normalize(NumericSeries& x) {
    const double n = static_cast<double>(x.size());
    double mean = 0.0, comp = 0.0;
    for (double v : x) {
        const double y = v - comp;
        const double t = mean + y;
        comp = (t - mean) - y;
        mean = t;
    }
    mean /= n;
    double var = 0.0;
    for (double& v : x) {
        v -= mean;
        var += v * v;
    }
    var /= n;
    const double inv = var > 0.0 ? 1.0 / std::sqrt(var) : 1.0;
    for (double& v : x) v *= inv;
}

// Chunk boundaries are multiples of 64 so loops with a 64-aligned twiddle
// refresh produce identical values under any worker count.
void parallel_chunks(std::size_t count, std::size_t threshold,
                     const std::function<void(std::size_t, std::size_t)>& fn) {
    const unsigned hw = std::thread::hardware_concurrency();
    const unsigned workers = count >= threshold && hw > 1 ? std::min(hw, 4u) : 1;
    if (workers == 1) {
        fn(0, count);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk =
        ((count + workers - 1) / workers + 63u) & ~std::size_t{63};
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t b = w * chunk;
        const std::size_t e = std::min(count, b + chunk);
        if (b < e) pool.emplace_back(fn, b, e);
    }
    for (auto& t : pool) t.join();
}

// Eigenvalues of the circulant embedding: the DFT of the real, even
// autocovariance ring c_j = gamma(min(j, M-j)), computed through a
// half-length complex FFT (pack even/odd lags, then the standard
// real-to-complex unpacking). Returns lam[0..H], H = M/2.
std::vector<double> circulant_eigenvalues(std::size_t m, double h) {
    const std::size_t half = m / 2;
    std::vector<std::complex<double>> packed(half);
    auto lag_cov = [&](std::size_t j) {
        return fgn_autocovariance(j <= half ? j : m - j, h);
    };
    parallel_chunks(half, std::size_t{1} << 18,
                    [&](std::size_t b, std::size_t e) {
                        for (std::size_t t = b; t < e; ++t)
                            packed[t] = {lag_cov(2 * t), lag_cov(2 * t + 1)};
                    });
    fft::forward(packed.data(), half);

    std::vector<double> lam(half + 1);
    lam[0] = packed[0].real() + packed[0].imag();
    lam[half] = packed[0].real() - packed[0].imag();
    const double step = -kTwoPi / static_cast<double>(m);
    std::complex<double> tw = std::polar(1.0, step);
    const std::complex<double> twmul = std::polar(1.0, step);
    for (std::size_t k = 1; k <= half / 2; ++k) {
        if ((k & 63u) == 1)
            tw = std::polar(1.0, step * static_cast<double>(k));
        const std::complex<double> zk = packed[k];
        const std::complex<double> zr = std::conj(packed[half - k]);
        const std::complex<double> even = 0.5 * (zk + zr);
        const std::complex<double> odd =
            std::complex<double>(0.0, -0.5) * (zk - zr);
        // C_k = even + W^k odd; C_{H-k} = conj(even) - conj(W^k odd)
        const std::complex<double> t1 = tw * odd;
        lam[k] = (even + t1).real();
        lam[half - k] = (std::conj(even) - std::conj(t1)).real();
        tw *= twmul;
    }
    return lam;
}

// Real inverse DFT of a conjugate-symmetric half-spectrum X[0..H] through a
// half-length complex inverse FFT: W_k = (X_k + conj(X_{H-k}))
//   + i V^k (X_k - conj(X_{H-k})), V = exp(+2 pi i / M); then
// x_{2j} = Re(w_j), x_{2j+1} = Im(w_j) with w = IDFT_H(W), unnormalized.
NumericSeries half_spectrum_to_real(const std::vector<std::complex<double>>& xs,
                                    std::size_t m, std::size_t n) {
    const std::size_t half = m / 2;
    std::vector<std::complex<double>> packed(half);
    const double step = kTwoPi / static_cast<double>(m);
    const std::complex<double> twmul = std::polar(1.0, step);
    // the twiddle recurrence restarts from polar() on the 64-aligned grid,
    // and parallel chunks start on that grid, so the values cannot depend on
    // the thread count
    parallel_chunks(half, std::size_t{1} << 18, [&](std::size_t b, std::size_t e) {
        std::complex<double> tw(1.0, 0.0);
        for (std::size_t k = b; k < e; ++k) {
            if ((k & 63u) == 0)
                tw = std::polar(1.0, step * static_cast<double>(k));
            const std::complex<double> xk = xs[k];
            const std::complex<double> xkh = std::conj(xs[half - k]);
            packed[k] =
                (xk + xkh) + std::complex<double>(0.0, 1.0) * tw * (xk - xkh);
            tw *= twmul;
        }
    });
    fft::inverse(packed.data(), half);

    const double inv_sqrt_m = 1.0 / std::sqrt(static_cast<double>(m));
    NumericSeries x(n);
    parallel_chunks((n + 1) / 2, std::size_t{1} << 18,
                    [&](std::size_t b, std::size_t e) {
                        for (std::size_t j = b; j < e; ++j) {
                            x[2 * j] = packed[j].real() * inv_sqrt_m;
                            if (2 * j + 1 < n)
                                x[2 * j + 1] = packed[j].imag() * inv_sqrt_m;
                        }
                    });
    return x;
}

}  // namespace

double fgn_autocovariance(std::size_t k, double h) {
    if (k == 0) return 1.0;
    const double e = 2.0 * h;
    if (k == 1) return 0.5 * (std::pow(2.0, e) - 2.0);
    // 0.5 (|k+1|^2H - 2 k^2H + |k-1|^2H) = 0.5 k^2H (yp + ym) with
    // y± = (1 ± 1/k)^2H - 1 via expm1/log1p, which avoids the second-
    // difference cancellation at large lags
    const double dk = static_cast<double>(k);
    const double yp = std::expm1(e * std::log1p(1.0 / dk));
    const double ym = std::expm1(e * std::log1p(-1.0 / dk));
    return 0.5 * std::pow(dk, e) * (yp + ym);
}

NumericSeries generate_fgn(const FgnConfig& cfg, FgnMethod* method_out) {
    validate(cfg);
    const std::size_t n = cfg.n;
    const double h = cfg.alpha0;
    const std::size_t m = fft::good_size(2 * n);  // even for all n >= 2
    const std::size_t half = m / 2;

    std::vector<double> lam = circulant_eigenvalues(m, h);
    double lam_max = 0.0, lam_min = 0.0;
    for (double v : lam) {
        lam_max = std::max(lam_max, v);
        lam_min = std::min(lam_min, v);
    }
    const bool exact = lam_min >= -1e-9 * lam_max;

    // half-spectrum draw order is part of the generator identity:
    // bin 0, then bins k = 1..H-1 as (re, im) pairs, then bin H
    rng::NormalSampler normal(cfg.seed);
    std::vector<std::complex<double>> xs(half + 1);
    if (exact) {
        xs[0] = std::sqrt(std::max(lam[0], 0.0)) * normal.next();
        for (std::size_t k = 1; k < half; ++k) {
            const double s = std::sqrt(std::max(lam[k], 0.0) * 0.5);
            const double re = s * normal.next();
            const double im = s * normal.next();
            xs[k] = {re, im};
        }
        xs[half] = std::sqrt(std::max(lam[half], 0.0)) * normal.next();
        if (method_out) *method_out = FgnMethod::circulant_exact;
    } else {
        std::fprintf(stderr,
                     "fgn: circulant embedding not non-negative definite at "
                     "n=%zu, alpha0=%.6f; falling back to spectral filtering\n",
                     n, h);
        const double beta = 2.0 * h - 1.0;
        xs[0] = 0.0;
        for (std::size_t k = 1; k < half; ++k) {
            const double s =
                std::sqrt(0.5 * std::pow(static_cast<double>(k), -beta));
            const double re = s * normal.next();
            const double im = s * normal.next();
            xs[k] = {re, im};
        }
        xs[half] =
            std::sqrt(std::pow(static_cast<double>(half), -beta)) * normal.next();
        if (method_out) *method_out = FgnMethod::spectral_filter;
    }

    NumericSeries x = half_spectrum_to_real(xs, m, n);
    normalize(x);
    return x;
}

}  // namespace zipfseq
