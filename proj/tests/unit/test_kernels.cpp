#include <cmath>
#include <vector>

#include "doctest.h"
#include "support/reference_dfa.hpp"
#include "support/test_util.hpp"
#include "zipfseq/kernels.hpp"

using namespace zipfseq;

namespace {

double rel_diff(double a, double b) {
    const double scale = std::max({std::fabs(a), std::fabs(b), 1e-30});
    return std::fabs(a - b) / scale;
}

}  // namespace

TEST_CASE("scalar kernels match the reference normal-equation solve") {
    for (std::size_t len : {std::size_t{3}, std::size_t{4}, std::size_t{7},
                            std::size_t{16}, std::size_t{101}, std::size_t{1024}}) {
        const auto y = test_util::random_series(len, 1000 + len, -5.0, 5.0);
        if (len >= 3)
            CHECK(rel_diff(kernels::segment_rss_order1_scalar(y.data(), len),
                           refdfa::segment_rss(y.data(), len, 1)) < 1e-10);
        if (len >= 4)
            CHECK(rel_diff(kernels::segment_rss_order2_scalar(y.data(), len),
                           refdfa::segment_rss(y.data(), len, 2)) < 1e-10);
    }
}

TEST_CASE("generic detrend matches specialized kernels and reference") {
    for (std::size_t len : {std::size_t{8}, std::size_t{33}, std::size_t{400}}) {
        const auto y = test_util::random_series(len, 7 * len, -2.0, 2.0);
        kernels::PolyDetrend d1(len, 1), d2(len, 2), d3(len, 3);
        CHECK(rel_diff(d1.rss(y.data()),
                       kernels::segment_rss_order1_scalar(y.data(), len)) < 1e-10);
        CHECK(rel_diff(d2.rss(y.data()),
                       kernels::segment_rss_order2_scalar(y.data(), len)) < 1e-10);
        CHECK(rel_diff(d3.rss(y.data()), refdfa::segment_rss(y.data(), len, 3)) <
              1e-9);
    }
}

TEST_CASE("order-2 detrending removes a quadratic exactly") {
    const std::size_t len = 64;
    std::vector<double> y(len);
    for (std::size_t t = 0; t < len; ++t) {
        const double td = static_cast<double>(t);
        y[t] = 3.0 - 0.25 * td + 0.01 * td * td;
    }
    CHECK(kernels::segment_rss_order2_scalar(y.data(), len) < 1e-9);
    kernels::PolyDetrend d2(len, 2);
    CHECK(d2.rss(y.data()) < 1e-9);
}

TEST_CASE("simd variants agree with scalar kernels") {
    const auto backend = kernels::active_backend();
    if (backend == kernels::Backend::scalar) {
        MESSAGE("no SIMD backend on this CPU; dispatch returns scalar");
        CHECK(kernels::segment_rss_order1() == &kernels::segment_rss_order1_scalar);
        return;
    }
    INFO("active backend: ", kernels::backend_name(backend));
    auto* simd1 = kernels::segment_rss_order1();
    auto* simd2 = kernels::segment_rss_order2();
    CHECK(simd1 != &kernels::segment_rss_order1_scalar);

    for (std::size_t len :
         {std::size_t{3}, std::size_t{4}, std::size_t{5}, std::size_t{6},
          std::size_t{7}, std::size_t{8}, std::size_t{9}, std::size_t{31},
          std::size_t{32}, std::size_t{33}, std::size_t{1000},
          std::size_t{100003}}) {
        const auto y = test_util::random_series(len, 31 * len + 5, -3.0, 3.0);
        CHECK(rel_diff(simd1(y.data(), len),
                       kernels::segment_rss_order1_scalar(y.data(), len)) < 1e-12);
        if (len >= 4)
            CHECK(rel_diff(simd2(y.data(), len),
                           kernels::segment_rss_order2_scalar(y.data(), len)) < 1e-12);
    }
}

TEST_CASE("force_backend pins and restores the dispatch") {
    const auto detected = kernels::active_backend();
    kernels::force_backend(kernels::Backend::scalar);
    CHECK(kernels::active_backend() == kernels::Backend::scalar);
    CHECK(kernels::segment_rss_order1() == &kernels::segment_rss_order1_scalar);
    kernels::force_backend(std::nullopt);
    CHECK(kernels::active_backend() == detected);
}
