#pragma once

// Shared helpers for the test binaries.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "zipfseq/rng.hpp"
#include "zipfseq/seqmodel.hpp"

namespace test_util {

inline std::vector<double> random_series(std::size_t n, std::uint64_t seed,
                                         double lo = -1.0, double hi = 1.0) {
    zipfseq::rng::Xoshiro256pp gen(seed);
    std::vector<double> x(n);
    for (auto& v : x) v = lo + (hi - lo) * gen.next_unit();
    return x;
}

inline std::vector<double> gaussian_series(std::size_t n, std::uint64_t seed) {
    zipfseq::rng::NormalSampler normal(seed);
    std::vector<double> x(n);
    for (auto& v : x) v = normal.next();
    return x;
}

/// Frequency table over auto-generated labels w1..wV with the given counts.
inline zipfseq::FrequencyTable table_from_counts(
    std::vector<std::int64_t> counts) {
    std::vector<std::string> labels(counts.size());
    for (std::size_t i = 0; i < labels.size(); ++i)
        labels[i] = "w" + std::to_string(i + 1);
    return zipfseq::FrequencyTable(
        std::make_shared<zipfseq::Alphabet>(std::move(labels)),
        std::move(counts));
}

/// Synthetic Zipf(gamma) table with V types and N tokens.
inline zipfseq::FrequencyTable zipf_table(std::size_t v, std::int64_t n,
                                          double gamma = 1.0) {
    return table_from_counts(zipfseq::synthetic_zipf_counts(v, n, gamma));
}

inline std::vector<std::int64_t> histogram(const zipfseq::SymbolSequence& seq) {
    std::vector<std::int64_t> h(seq.alphabet().size(), 0);
    for (auto id : seq.ids()) ++h[id];
    return h;
}

}  // namespace test_util
