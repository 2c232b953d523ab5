#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "zipfseq/fft.hpp"
#include "zipfseq/rng.hpp"

using namespace zipfseq;

namespace {

std::vector<std::complex<double>> naive_dft(
    const std::vector<std::complex<double>>& x, double sign) {
    const std::size_t n = x.size();
    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double ang = sign * 2.0 * M_PI * static_cast<double>(j * k) /
                               static_cast<double>(n);
            acc += x[j] * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        out[k] = acc;
    }
    return out;
}

}  // namespace

TEST_CASE("xoshiro stream is deterministic and uniform-ish") {
    rng::Xoshiro256pp a(42), b(42), c(43);
    bool all_equal = true, any_diff = false;
    double mean = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const auto va = a.next();
        all_equal = all_equal && (va == b.next());
        any_diff = any_diff || (va != c.next());
        mean += (static_cast<double>(va >> 11) + 0.5) * 0x1.0p-53;
    }
    CHECK(all_equal);
    CHECK(any_diff);
    CHECK(std::abs(mean / 10000.0 - 0.5) < 0.02);
}

TEST_CASE("next_below is in range and covers values") {
    rng::Xoshiro256pp gen(7);
    std::vector<int> seen(10, 0);
    for (int i = 0; i < 5000; ++i) {
        const auto v = gen.next_below(10);
        REQUIRE(v < 10);
        ++seen[v];
    }
    for (int count : seen) CHECK(count > 300);
}

TEST_CASE("derive_seed decorrelates indices") {
    CHECK(rng::derive_seed(1, 0) != rng::derive_seed(1, 1));
    CHECK(rng::derive_seed(1, 0) != rng::derive_seed(2, 0));
}

TEST_CASE("normal sampler moments") {
    rng::NormalSampler normal(2024);
    const int n = 200000;
    double m1 = 0.0, m2 = 0.0, m4 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double v = normal.next();
        m1 += v;
        m2 += v * v;
        m4 += v * v * v * v;
    }
    m1 /= n;
    m2 /= n;
    m4 /= n;
    CHECK(std::abs(m1) < 0.01);
    CHECK(std::abs(m2 - 1.0) < 0.02);
    CHECK(std::abs(m4 - 3.0) < 0.15);  // Gaussian kurtosis
}

TEST_CASE("fft good_size shapes") {
    CHECK(fft::good_size(1) == 1);
    CHECK(fft::good_size(2) == 2);
    CHECK(fft::good_size(4) == 4);
    CHECK(fft::good_size(5) == 5);
    CHECK(fft::good_size(7) == 8);
    CHECK(fft::good_size(17) == 20);
    CHECK(fft::good_size(2000000) == (1u << 21));
    CHECK(fft::good_size(20000000) == 5u * (1u << 22));
}

TEST_CASE("fft matches naive dft on all radix shapes") {
    rng::Xoshiro256pp gen(99);
    for (std::size_t n : {std::size_t{2}, std::size_t{4}, std::size_t{6},
                          std::size_t{8}, std::size_t{12}, std::size_t{20},
                          std::size_t{40}, std::size_t{64}, std::size_t{96},
                          std::size_t{160}, std::size_t{256}}) {
        std::vector<std::complex<double>> x(n);
        for (auto& v : x) v = {2.0 * gen.next_unit() - 1.0, 2.0 * gen.next_unit() - 1.0};
        auto want = naive_dft(x, -1.0);
        auto got = x;
        fft::forward(got.data(), n);
        for (std::size_t k = 0; k < n; ++k)
            CHECK(std::abs(got[k] - want[k]) < 1e-9 * static_cast<double>(n));
    }
}

TEST_CASE("fft inverse round trip") {
    rng::Xoshiro256pp gen(123);
    const std::size_t n = 96;  // 3 * 2^5
    std::vector<std::complex<double>> x(n);
    for (auto& v : x) v = {gen.next_unit(), gen.next_unit()};
    auto y = x;
    fft::forward(y.data(), n);
    fft::inverse(y.data(), n);
    for (std::size_t i = 0; i < n; ++i)
        CHECK(std::abs(y[i] / static_cast<double>(n) - x[i]) < 1e-12);
}

TEST_CASE("large transforms: impulse response and round trip") {
    // sizes past the iterative cutoff exercise the blocked recursion and the
    // composite stage on top of it; FFT(delta_p)[k] = exp(-2 pi i p k / n)
    for (std::size_t n : {std::size_t{1} << 20, std::size_t{5} << 19}) {
        const std::size_t p = n / 3 + 17;
        std::vector<std::complex<double>> x(n, 0.0);
        x[p] = 1.0;
        fft::forward(x.data(), n);
        double worst = 0.0;
        const double step = -2.0 * M_PI * static_cast<double>(p) /
                            static_cast<double>(n);
        for (std::size_t k = 0; k < n; k += 97) {
            const auto want = std::polar(1.0, step * static_cast<double>(k));
            worst = std::max(worst, std::abs(x[k] - want));
        }
        CHECK(worst < 1e-9);

        rng::Xoshiro256pp gen(n);
        std::vector<std::complex<double>> r(n);
        for (auto& v : r) v = {gen.next_unit() - 0.5, gen.next_unit() - 0.5};
        auto y = r;
        fft::forward(y.data(), n);
        fft::inverse(y.data(), n);
        double rt = 0.0;
        for (std::size_t i = 0; i < n; i += 101)
            rt = std::max(rt, std::abs(y[i] / static_cast<double>(n) - r[i]));
        CHECK(rt < 1e-10);
    }
}
