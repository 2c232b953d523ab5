#include <cmath>
#include <complex>

#include "doctest.h"
#include "support/test_util.hpp"
#include "zipfseq/dfa.hpp"
#include "zipfseq/fft.hpp"
#include "zipfseq/fgn.hpp"

using namespace zipfseq;

namespace {

// log-periodogram slope over the low-frequency band; the spectral route to
// the exponent, independent of DFA
double periodogram_slope(const NumericSeries& x) {
    const std::size_t n = x.size();
    std::vector<std::complex<double>> buf(n);
    for (std::size_t i = 0; i < n; ++i) buf[i] = x[i];
    fft::forward(buf.data(), n);
    std::vector<std::size_t> ks;
    std::vector<double> ly, lx;
    for (std::size_t k = 1; k <= n / 32; ++k) {
        const double p = std::norm(buf[k]);
        if (p <= 0.0) continue;
        lx.push_back(std::log10(static_cast<double>(k)));
        ly.push_back(std::log10(p));
    }
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= static_cast<double>(lx.size());
    my /= static_cast<double>(lx.size());
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    return sxy / sxx;
}

}  // namespace

TEST_CASE("fgn config validation") {
    CHECK_THROWS_AS(generate_fgn({1, 0.5, 0}), Error);
    CHECK_THROWS_AS(generate_fgn({100, 0.0, 0}), Error);
    CHECK_THROWS_AS(generate_fgn({100, 1.0, 0}), Error);
}

TEST_CASE("fgn autocovariance values") {
    CHECK(fgn_autocovariance(0, 0.7) == 1.0);
    // H = 0.5 is white noise: zero covariance at every positive lag
    CHECK(std::fabs(fgn_autocovariance(1, 0.5)) < 1e-15);
    CHECK(std::fabs(fgn_autocovariance(1000, 0.5)) < 1e-12);
    // direct evaluation at small lags where cancellation is harmless
    const double h = 0.8;
    const double direct =
        0.5 * (std::pow(3.0, 2 * h) - 2 * std::pow(2.0, 2 * h) + 1.0);
    CHECK(fgn_autocovariance(2, h) == doctest::Approx(direct).epsilon(1e-12));
    // positive persistence for H > 0.5, decaying
    CHECK(fgn_autocovariance(10, 0.8) > 0.0);
    CHECK(fgn_autocovariance(100, 0.8) < fgn_autocovariance(10, 0.8));
    // asymptotic decay ~ H(2H-1) k^(2H-2)
    const double k = 1e6;
    const double expect = h * (2 * h - 1) * std::pow(k, 2 * h - 2);
    CHECK(fgn_autocovariance(static_cast<std::size_t>(k), h) ==
          doctest::Approx(expect).epsilon(1e-3));
}

TEST_CASE("same config twice gives identical series") {
    FgnConfig cfg{4096, 0.72, 99};
    FgnMethod m1, m2;
    const auto a = generate_fgn(cfg, &m1);
    const auto b = generate_fgn(cfg, &m2);
    CHECK(a == b);
    CHECK(m1 == FgnMethod::circulant_exact);
    CHECK(m1 == m2);

    cfg.seed = 100;
    CHECK(generate_fgn(cfg) != a);
}

TEST_CASE("output is normalised to mean 0 variance 1") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto x = generate_fgn({1 << 14, 0.65, seed});
        double mean = 0.0;
        for (double v : x) mean += v;
        mean /= static_cast<double>(x.size());
        double var = 0.0;
        for (double v : x) var += (v - mean) * (v - mean);
        var /= static_cast<double>(x.size());
        CHECK(std::fabs(mean) < 5.0 / std::sqrt(static_cast<double>(x.size())));
        CHECK(std::fabs(var - 1.0) < 0.1);
    }
}

TEST_CASE("embedding stays positive across the hurst range") {
    for (double h : {0.05, 0.2, 0.35, 0.5, 0.62, 0.75, 0.9, 0.97}) {
        FgnMethod method;
        (void)generate_fgn({5000, h, 1}, &method);
        CHECK(method == FgnMethod::circulant_exact);
    }
}

TEST_CASE("alpha0 = 0.5 behaves as white noise under dfa") {
    const auto x = generate_fgn({1 << 16, 0.5, 7});
    const auto res = dfa_exponent(x);
    CHECK(res.alpha > 0.47);
    CHECK(res.alpha < 0.53);
}

TEST_CASE("alpha0 = 0.7 recovered by dfa and by the periodogram") {
    const auto x = generate_fgn({1 << 17, 0.7, 21});
    const auto res = dfa_exponent(x);
    CHECK(res.alpha > 0.67);
    CHECK(res.alpha < 0.73);
    // beta = 2 alpha - 1: the low-frequency periodogram slope is -beta
    const double slope = periodogram_slope(x);
    CHECK(std::fabs(-slope - (2 * 0.7 - 1)) < 0.1);
}

TEST_CASE("smoke recovery at a second exponent") {
    const auto x = generate_fgn({1 << 15, 0.75, 3});
    const auto res = dfa_exponent(x);
    CHECK(res.alpha > 0.69);
    CHECK(res.alpha < 0.81);
}
