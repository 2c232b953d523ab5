#pragma once

// Fractional Gaussian noise with a prescribed scaling exponent and
// deterministic seeding: same config, same bits, always.

#include <cstdint>

#include "zipfseq/seqmodel.hpp"

namespace zipfseq {

struct FgnConfig {
    std::size_t n = 0;       // length, >= 2
    double alpha0 = 0.5;     // target exponent (Hurst), in (0, 1)
    std::uint64_t seed = 0;
};

enum class FgnMethod {
    circulant_exact,   // circulant embedding of the exact autocovariance
    spectral_filter,   // approximate fallback when the embedding fails
};

/// Generates an FGN realisation of length cfg.n with Hurst exponent
/// cfg.alpha0, normalised to sample mean 0 and variance 1. The synthesis is
/// exact in distribution via circulant embedding of the FGN autocovariance;
/// if the embedding has genuinely negative eigenvalues the generator falls
/// back to Fourier filtering of the target spectrum and warns on stderr.
/// method_out, when non-null, records which path ran.
NumericSeries generate_fgn(const FgnConfig& cfg, FgnMethod* method_out = nullptr);

/// Autocovariance of unit-variance FGN at lag k for Hurst exponent h,
/// evaluated in a cancellation-safe form.
double fgn_autocovariance(std::size_t k, double h);

}  // namespace zipfseq
