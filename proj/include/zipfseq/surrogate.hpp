#pragma once

// Rank-based discretisation of an FGN realisation onto an empirical
// frequency table, and the bisection search that matches a target DFA
// exponent. The discretisation preserves the table's histogram exactly;
// the search corrects for the exponent loss the discretisation causes.

#include <cstdint>
#include <utility>
#include <vector>

#include "zipfseq/dfa.hpp"
#include "zipfseq/seqmodel.hpp"

namespace zipfseq {

/// How the surrogate symbol sequence is turned into numbers when its DFA
/// exponent is measured: by frequency rank (word alphabets) or by the
/// purine-pyrimidine +/-1 walk ({A,C,G,T} alphabets).
enum class MeasurementEncoding { rank_value, ry_walk };

struct MatchConfig {
    double target_alpha = 0.7;        // in [0.5, 1)
    double epsilon = 0.01;            // |alpha_S - target| tolerance
    std::pair<double, double> bracket{0.5, 0.99};  // initial alpha0 interval
    int max_iters = 40;
    int reseed_after = 5;             // stalled iterations before reseeding
    std::uint64_t base_seed = 0;
    DfaConfig dfa;                    // measurement protocol for alpha_S
    MeasurementEncoding encoding = MeasurementEncoding::rank_value;
};

struct IterationRecord {
    double alpha0 = 0.0;
    double alpha_s = 0.0;
    std::uint64_t seed = 0;
    bool non_monotone = false;  // response decreased where it should not
};

struct SurrogateResult {
    SymbolSequence sequence;
    double achieved_alpha = 0.0;
    double final_alpha0 = 0.0;
    int iterations = 0;
    std::vector<std::uint64_t> seeds_used;
    bool converged = false;
    std::vector<IterationRecord> trace;
};

/// Sorts z ascending (ties by index) and assigns symbols by rank: the most
/// frequent symbol covers the lowest f(a_1) order statistics, the next the
/// following f(a_2), and so on; the original temporal order is restored.
/// The output histogram equals the table exactly and the mapping is a
/// monotone step function of z.
SymbolSequence discretize_rank_based(const NumericSeries& z,
                                     const FrequencyTable& table);

/// FGN of length table.total() at exponent alpha0, discretised onto the
/// table. Deterministic in (table, alpha0, seed); O(N log N).
SymbolSequence generate_surrogate(const FrequencyTable& table, double alpha0,
                                  std::uint64_t seed);

/// Bisection over the FGN input exponent until the measured exponent of the
/// surrogate is within epsilon of the target. Reseeds deterministically when
/// the search stalls; throws "target unreachable" when even the top of the
/// bracket cannot reach the target.
SurrogateResult match_target_exponent(const FrequencyTable& table,
                                      const MatchConfig& cfg);

/// Numeric series used to measure a surrogate's exponent under an encoding.
NumericSeries numerify(const SymbolSequence& seq, const FrequencyTable& table,
                       MeasurementEncoding encoding);

}  // namespace zipfseq
