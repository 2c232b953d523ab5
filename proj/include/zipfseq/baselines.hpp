#pragma once

// Hierarchical shuffling baselines: character-, word- and sentence-level
// permutations with deterministic seeding (same PRNG family as fgn).

#include <cstdint>
#include <string>
#include <string_view>

#include "zipfseq/encoders.hpp"
#include "zipfseq/seqmodel.hpp"

namespace zipfseq {

enum class ShuffleLevel { characters, words, sentences };

/// Uniform permutation of the tokens (Fisher-Yates); histogram preserved.
SymbolSequence shuffle_words(const SymbolSequence& seq, std::uint64_t seed);

/// Splits text into sentences at {. ! ?} followed by whitespace (or end of
/// text), permutes the sentence order, keeps tokens inside each sentence in
/// place, and returns the concatenated token sequence. A text without
/// terminators is a single sentence.
SymbolSequence shuffle_sentences(std::string_view text, std::uint64_t seed,
                                 const TokenizerOptions& opts = {});

/// Uniform permutation of the text's Unicode scalar values.
std::string shuffle_characters(std::string_view text, std::uint64_t seed);

}  // namespace zipfseq
