#pragma once

// Core domain types: alphabets, symbol sequences, frequency tables in rank
// order, and real-valued series. Everything is immutable after construction
// and safe to share across threads; symbols are interned to integer ids once
// and all downstream work runs on ids.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "zipfseq/error.hpp"

namespace zipfseq {

using SymbolId = std::uint32_t;

/// A real-valued series (FGN realisation, rank-encoded text, +/-1 DNA walk).
using NumericSeries = std::vector<double>;

class Alphabet {
public:
    Alphabet() = default;
    /// Takes ownership of the labels; throws on duplicates or empty list.
    explicit Alphabet(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    const std::string& label(SymbolId id) const { return labels_[id]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<SymbolId> find(std::string_view label) const;

private:
    struct StringHash {
        using is_transparent = void;
        std::size_t operator()(std::string_view s) const {
            return std::hash<std::string_view>{}(s);
        }
    };

    std::vector<std::string> labels_;
    std::unordered_map<std::string, SymbolId, StringHash, std::equal_to<>> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// An ordered token stream over an alphabet; ids index into the alphabet.
class SymbolSequence {
public:
    SymbolSequence() : alphabet_(std::make_shared<Alphabet>()) {}
    SymbolSequence(AlphabetPtr alphabet, std::vector<SymbolId> ids);

    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }
    const std::vector<SymbolId>& ids() const { return ids_; }
    const Alphabet& alphabet() const { return *alphabet_; }
    const AlphabetPtr& alphabet_ptr() const { return alphabet_; }
    const std::string& label_at(std::size_t i) const {
        return alphabet_->label(ids_[i]);
    }

private:
    AlphabetPtr alphabet_;
    std::vector<SymbolId> ids_;
};

/// Vocabulary with empirical counts in descending (Zipf) order. Index i of
/// the rank alphabet is rank i+1. Keeps the source alphabet it was built
/// from so sequences sharing it encode without label lookups.
class FrequencyTable {
public:
    FrequencyTable() = default;
    /// Ranked construction: alphabet already in rank order, counts descending.
    FrequencyTable(AlphabetPtr rank_alphabet, std::vector<std::int64_t> counts);

    const Alphabet& alphabet() const { return *rank_alphabet_; }
    const AlphabetPtr& alphabet_ptr() const { return rank_alphabet_; }
    const std::vector<std::int64_t>& counts() const { return counts_; }
    std::int64_t total() const { return total_; }
    std::size_t vocabulary_size() const { return counts_.size(); }

    /// Rank (1-based) of a source-alphabet id; only for tables built by
    /// build_frequency_table over that alphabet.
    const std::vector<SymbolId>& source_to_rank_index() const {
        return source_to_rank_;
    }
    const AlphabetPtr& source_alphabet_ptr() const { return source_alphabet_; }

    friend FrequencyTable build_frequency_table(const SymbolSequence& seq);

private:
    AlphabetPtr rank_alphabet_;
    std::vector<std::int64_t> counts_;
    std::int64_t total_ = 0;
    AlphabetPtr source_alphabet_;          // may be null
    std::vector<SymbolId> source_to_rank_; // source id -> rank index (rank-1)
};

/// Counts symbol occurrences and reorders the vocabulary by descending
/// frequency; ties broken by first occurrence in the sequence, then label.
FrequencyTable build_frequency_table(const SymbolSequence& seq);

/// Replaces each token by its 1-based frequency rank, as a real series.
NumericSeries zipf_rank_encode(const SymbolSequence& seq,
                               const FrequencyTable& table);

/// Inverse of zipf_rank_encode under the rank -> symbol map.
SymbolSequence zipf_rank_decode(const NumericSeries& ranks,
                                const FrequencyTable& table);

/// Descending integer counts f(r) ~ C / r^gamma summing exactly to total,
/// every count >= 1. Utility for synthetic experiments.
std::vector<std::int64_t> synthetic_zipf_counts(std::size_t vocabulary,
                                                std::int64_t total,
                                                double gamma);

}  // namespace zipfseq
