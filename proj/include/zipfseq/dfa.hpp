#pragma once

// Detrended fluctuation analysis: profile construction, per-window
// polynomial detrending, the fluctuation function F(L), and the log-log
// exponent fit, plus the scaling-relation helpers alpha(zeta) and
// beta(alpha).

#include <cstddef>
#include <utility>
#include <vector>

#include "zipfseq/seqmodel.hpp"

namespace zipfseq {

enum class Segmentation { forward_only, both_ends };

struct DfaConfig {
    int order = 1;  // polynomial detrending order m >= 1
    /// Window sizes L, strictly increasing; empty selects ~20 log-spaced
    /// integers between 2(m+2) and N/4.
    std::vector<std::size_t> window_sizes;
    /// Fit range [L_lo, L_hi] over the window list; {0, 0} means full list.
    std::pair<std::size_t, std::size_t> fit_range{0, 0};
    Segmentation segmentation = Segmentation::both_ends;
    /// Worker threads for the per-window loop; 0 picks a default. Never
    /// affects results, only wall time.
    int threads = 0;
};

struct DfaResult {
    std::vector<std::size_t> window_sizes;
    std::vector<double> fluctuations;
    double alpha = 0.0;
    double fit_stderr = 0.0;
    double r_squared = 0.0;
    std::pair<std::size_t, std::size_t> fit_range{0, 0};  // L bounds actually used
};

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double stderr_slope = 0.0;
    double r_squared = 0.0;
};

/// Cumulative sum of the mean-subtracted series (compensated summation).
NumericSeries profile(const NumericSeries& x);

/// RMS residual of the profile of x after order-m detrending in windows of
/// size L. both_ends averages over floor(N/L) windows anchored at the start
/// and the same count anchored at the end.
double fluctuation(const NumericSeries& x, std::size_t window, int order = 1,
                   Segmentation segmentation = Segmentation::both_ends);

/// Same computation over an already-built profile; this is the per-window
/// routine dfa_exponent runs, exposed for callers sweeping many windows.
double fluctuation_of_profile(const NumericSeries& y, std::size_t window,
                              int order = 1,
                              Segmentation segmentation = Segmentation::both_ends);

/// Full DFA: F(L) over the window schedule and the fitted exponent.
DfaResult dfa_exponent(const NumericSeries& x, const DfaConfig& cfg = {});

/// Ordinary least squares of log10 F on log10 L over windows in [lo, hi].
LineFit fit_loglog(const std::vector<std::size_t>& windows,
                   const std::vector<double>& fluctuations,
                   std::pair<std::size_t, std::size_t> range);

/// Default window schedule: ~20 log-spaced integers in [2(m+2), N/4].
std::vector<std::size_t> default_window_sizes(std::size_t n, int order);

/// alpha = 1 - zeta/2 for autocorrelation decay C(s) ~ s^-zeta, 0 < zeta <= 1.
double alpha_from_zeta(double zeta);

/// beta = 2*alpha - 1 for spectral density S(f) ~ f^-beta.
double beta_from_alpha(double alpha);

}  // namespace zipfseq
