#include "zipfseq/dfa.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <thread>

#include "zipfseq/kernels.hpp"

namespace zipfseq {

namespace {

struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double v) {
        const double y = v - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 8u));
}

// Mean squared residual machinery over the precomputed profile.
double fluctuation_from_profile(const double* y, std::size_t n, std::size_t window,
                                int order, Segmentation segmentation) {
    if (order < 1) throw Error("detrending order must be >= 1");
    if (window < static_cast<std::size_t>(order) + 2 || window > n)
        throw Error("window size " + std::to_string(window) +
                    " out of range for series of length " + std::to_string(n));

    const std::size_t count = n / window;
    const bool tail = segmentation == Segmentation::both_ends && n % window != 0;

    kernels::SegmentRssFn fn = nullptr;
    std::unique_ptr<kernels::PolyDetrend> generic;
    if (order == 1)
        fn = kernels::segment_rss_order1();
    else if (order == 2)
        fn = kernels::segment_rss_order2();
    else
        generic = std::make_unique<kernels::PolyDetrend>(window, order);

    auto seg_rss = [&](const double* seg) {
        return fn ? fn(seg, window) : generic->rss(seg);
    };

    KahanSum rss;
    for (std::size_t s = 0; s < count; ++s) rss.add(seg_rss(y + s * window));
    if (tail) {
        const std::size_t base = n - count * window;
        for (std::size_t s = 0; s < count; ++s) rss.add(seg_rss(y + base + s * window));
    }
    const double points =
        static_cast<double>(count * window) * (tail ? 2.0 : 1.0);
    return std::sqrt(rss.sum / points);
}

}  // namespace

NumericSeries profile(const NumericSeries& x) {
    if (x.empty()) throw Error("profile: empty input");
    KahanSum total;
    for (double v : x) total.add(v);
    const double mean = total.sum / static_cast<double>(x.size());

    NumericSeries y(x.size());
    KahanSum run;
    for (std::size_t i = 0; i < x.size(); ++i) {
        run.add(x[i] - mean);
        y[i] = run.sum;
    }
    if (!std::isfinite(y.back()))
        throw Error("profile: input contains non-finite values");
    return y;
}

double fluctuation(const NumericSeries& x, std::size_t window, int order,
                   Segmentation segmentation) {
    const NumericSeries y = profile(x);
    return fluctuation_from_profile(y.data(), y.size(), window, order, segmentation);
}

double fluctuation_of_profile(const NumericSeries& y, std::size_t window,
                              int order, Segmentation segmentation) {
    if (y.empty()) throw Error("fluctuation: empty profile");
    return fluctuation_from_profile(y.data(), y.size(), window, order, segmentation);
}

std::vector<std::size_t> default_window_sizes(std::size_t n, int order) {
    if (order < 1) throw Error("detrending order must be >= 1");
    const std::size_t lmin = 2 * (static_cast<std::size_t>(order) + 2);
    const std::size_t lmax = n / 4;
    if (lmax < lmin)
        throw Error("series too short for DFA: need at least " +
                    std::to_string(4 * lmin) + " points");
    const int target = 20;
    std::vector<std::size_t> windows;
    const double la = std::log(static_cast<double>(lmin));
    const double lb = std::log(static_cast<double>(lmax));
    for (int i = 0; i < target; ++i) {
        const double f = target == 1 ? 0.0 : static_cast<double>(i) / (target - 1);
        const auto w = static_cast<std::size_t>(
            std::llround(std::exp(la + f * (lb - la))));
        if (windows.empty() || w > windows.back()) windows.push_back(w);
    }
    return windows;
}

LineFit fit_loglog(const std::vector<std::size_t>& windows,
                   const std::vector<double>& fluctuations,
                   std::pair<std::size_t, std::size_t> range) {
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < windows.size(); ++i) {
        if (windows[i] < range.first || windows[i] > range.second) continue;
        if (!(fluctuations[i] > 0.0))
            throw Error("degenerate fluctuation (F = 0) at L = " +
                        std::to_string(windows[i]));
        xs.push_back(std::log10(static_cast<double>(windows[i])));
        ys.push_back(std::log10(fluctuations[i]));
    }
    const std::size_t n = xs.size();
    if (n < 2) throw Error("fit range must cover at least two window sizes");

    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double rss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
        rss += r * r;
    }
    fit.stderr_slope =
        n > 2 ? std::sqrt(rss / (static_cast<double>(n) - 2.0) / sxx) : 0.0;
    fit.r_squared = syy > 0.0 ? 1.0 - rss / syy : 1.0;
    return fit;
}

DfaResult dfa_exponent(const NumericSeries& x, const DfaConfig& cfg) {
    const std::size_t n = x.size();
    std::vector<std::size_t> windows = cfg.window_sizes.empty()
                                           ? default_window_sizes(n, cfg.order)
                                           : cfg.window_sizes;
    for (std::size_t i = 0; i < windows.size(); ++i) {
        if (i > 0 && windows[i] <= windows[i - 1])
            throw Error("window sizes must be strictly increasing");
        if (windows[i] < static_cast<std::size_t>(cfg.order) + 2)
            throw Error("window size " + std::to_string(windows[i]) +
                        " too small for order " + std::to_string(cfg.order));
    }
    if (windows.back() > n / 4)
        throw Error("largest window " + std::to_string(windows.back()) +
                    " exceeds N/4 = " + std::to_string(n / 4));

    const NumericSeries y = profile(x);
    std::vector<double> fl(windows.size());

    const int threads =
        std::min<int>(resolve_threads(cfg.threads), static_cast<int>(windows.size()));
    if (threads <= 1) {
        for (std::size_t i = 0; i < windows.size(); ++i)
            fl[i] = fluctuation_from_profile(y.data(), n, windows[i], cfg.order,
                                             cfg.segmentation);
    } else {
        // static round-robin; every window writes its own slot so the result
        // does not depend on the thread count
        std::vector<std::thread> pool;
        pool.reserve(threads);
        std::exception_ptr first_error;
        std::mutex err_mu;
        for (int w = 0; w < threads; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < windows.size();
                         i += static_cast<std::size_t>(threads))
                        fl[i] = fluctuation_from_profile(
                            y.data(), n, windows[i], cfg.order, cfg.segmentation);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mu);
                    if (!first_error) first_error = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    std::pair<std::size_t, std::size_t> range = cfg.fit_range;
    if (range.first == 0 && range.second == 0)
        range = {windows.front(), windows.back()};

    const LineFit fit = fit_loglog(windows, fl, range);

    DfaResult res;
    res.window_sizes = std::move(windows);
    res.fluctuations = std::move(fl);
    res.alpha = fit.slope;
    res.fit_stderr = fit.stderr_slope;
    res.r_squared = fit.r_squared;
    res.fit_range = range;
    return res;
}

double alpha_from_zeta(double zeta) {
    if (!(zeta > 0.0) || zeta > 1.0)
        throw Error("zeta must be in (0, 1]");
    return 1.0 - 0.5 * zeta;
}

double beta_from_alpha(double alpha) {
    if (!std::isfinite(alpha)) throw Error("alpha must be finite");
    return 2.0 * alpha - 1.0;
}

}  // namespace zipfseq
