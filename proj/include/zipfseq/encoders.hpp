#pragma once

// Raw-input encoders: UTF-8 text tokenization and FASTA/DNA ingestion.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "zipfseq/seqmodel.hpp"

namespace zipfseq {

struct TokenizerOptions {
    enum class PunctuationMode { strip, as_tokens };

    bool lowercase = true;  // simple (non-expanding) case folding
    PunctuationMode punctuation_mode = PunctuationMode::strip;
};

struct DnaEncodeOptions {
    enum class NonAcgtPolicy { skip, fail };
    NonAcgtPolicy non_acgt_policy = NonAcgtPolicy::skip;
};

/// Whitespace-splits UTF-8 text into word tokens. strip mode removes leading
/// and trailing punctuation from each token (hyphenated words stay whole);
/// as_tokens mode makes every punctuation mark its own token. Throws with
/// the byte offset on invalid UTF-8.
SymbolSequence tokenize(std::string_view text, const TokenizerOptions& opts = {});

/// Raw token spellings in order, before interning; same splitting rules.
std::vector<std::string> tokenize_to_strings(std::string_view text,
                                             const TokenizerOptions& opts = {});

struct FastaResult {
    SymbolSequence sequence;        // over the fixed {A, C, G, T} alphabet
    std::uint64_t skipped_count = 0;  // non-ACGT characters dropped (skip policy)
};

/// Parses FASTA ('>' headers, CR/LF or LF). Concatenates all records in file
/// order, or just the record whose id (first word of the header) matches
/// record_id. Bases are uppercased; non-ACGT handling per opts.
FastaResult parse_fasta(std::istream& in, const DnaEncodeOptions& opts = {},
                        const std::optional<std::string>& record_id = std::nullopt);

/// The fixed DNA alphabet {A, C, G, T}, shared by all FASTA parses.
const AlphabetPtr& dna_alphabet();

/// Purine-pyrimidine walk: {A, G} -> +1, {C, T} -> -1.
NumericSeries ry_encode(const SymbolSequence& dna);

/// Code point classifiers backing the tokenizer (exposed for tests).
bool is_punctuation(char32_t cp);
bool is_whitespace(char32_t cp);
char32_t fold_lowercase(char32_t cp);

}  // namespace zipfseq
