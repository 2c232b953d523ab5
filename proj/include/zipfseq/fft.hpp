#pragma once

#include <complex>
#include <cstddef>

namespace zipfseq::fft {

/// Smallest supported transform size >= minimum. Supported sizes are
/// 2^k, 3*2^k and 5*2^k, which keeps padding overhead below 25%.
std::size_t good_size(std::size_t minimum);

/// In-place complex DFT, unnormalized: X[k] = sum_j x[j] exp(-2*pi*i*j*k/n).
/// n must be a good_size.
void forward(std::complex<double>* data, std::size_t n);

/// In-place inverse DFT, unnormalized (no 1/n): caller scales if needed.
void inverse(std::complex<double>* data, std::size_t n);

}  // namespace zipfseq::fft
