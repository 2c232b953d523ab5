#include "zipfseq/baselines.hpp"

#include <algorithm>
#include <numeric>

#include "zipfseq/rng.hpp"

namespace zipfseq {

namespace {

// Fisher-Yates with the documented PRNG; identical results regardless of
// element type via index permutation.
template <typename T>
void fisher_yates(std::vector<T>& items, std::uint64_t seed) {
    rng::Xoshiro256pp gen(seed);
    for (std::size_t i = items.size(); i > 1; --i) {
        const std::size_t j = gen.next_below(i);
        std::swap(items[i - 1], items[j]);
    }
}

bool is_sentence_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

}  // namespace

SymbolSequence shuffle_words(const SymbolSequence& seq, std::uint64_t seed) {
    std::vector<SymbolId> ids = seq.ids();
    fisher_yates(ids, seed);
    return SymbolSequence(seq.alphabet_ptr(), std::move(ids));
}

SymbolSequence shuffle_sentences(std::string_view text, std::uint64_t seed,
                                 const TokenizerOptions& opts) {
    if (text.empty()) throw Error("shuffle_sentences: empty text");

    // sentence = maximal span ending at a terminator followed by whitespace;
    // ASCII boundary scan is safe in UTF-8 (continuation bytes are >= 0x80)
    std::vector<std::string_view> sentences;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (!is_sentence_terminator(text[i])) continue;
        const bool at_end = i + 1 >= text.size();
        const char next = at_end ? ' ' : text[i + 1];
        if (at_end || next == ' ' || next == '\t' || next == '\n' ||
            next == '\r' || next == '\f' || next == '\v') {
            sentences.push_back(text.substr(start, i + 1 - start));
            start = i + 1;
        }
    }
    if (start < text.size()) sentences.push_back(text.substr(start));

    fisher_yates(sentences, seed);

    std::string reordered;
    reordered.reserve(text.size() + sentences.size());
    for (const auto& s : sentences) {
        reordered.append(s);
        reordered.push_back(' ');
    }
    return tokenize(reordered, opts);
}

std::string shuffle_characters(std::string_view text, std::uint64_t seed) {
    // decode to scalar values so multi-byte characters stay intact
    std::vector<char32_t> cps;
    cps.reserve(text.size());
    {
        // reuse the tokenizer's validating decoder indirectly: a plain decode
        // pass with the same error contract
        std::size_t i = 0;
        while (i < text.size()) {
            const std::size_t at = i;
            const auto b0 = static_cast<unsigned char>(text[i]);
            char32_t cp = 0;
            int extra = 0;
            if (b0 < 0x80) {
                cp = b0;
            } else if ((b0 & 0xE0) == 0xC0) {
                extra = 1;
                cp = b0 & 0x1F;
            } else if ((b0 & 0xF0) == 0xE0) {
                extra = 2;
                cp = b0 & 0x0F;
            } else if ((b0 & 0xF8) == 0xF0) {
                extra = 3;
                cp = b0 & 0x07;
            } else {
                throw Error("invalid UTF-8 at byte offset " + std::to_string(at));
            }
            if (i + static_cast<std::size_t>(extra) >= text.size())
                throw Error("invalid UTF-8 at byte offset " + std::to_string(at));
            for (int k = 1; k <= extra; ++k) {
                const auto b = static_cast<unsigned char>(text[i + k]);
                if ((b & 0xC0) != 0x80)
                    throw Error("invalid UTF-8 at byte offset " + std::to_string(at));
                cp = (cp << 6) | (b & 0x3F);
            }
            i += extra + 1;
            cps.push_back(cp);
        }
    }

    fisher_yates(cps, seed);

    std::string out;
    out.reserve(text.size());
    for (char32_t cp : cps) {
        if (cp < 0x80) {
            out.push_back(static_cast<char>(cp));
        } else if (cp < 0x800) {
            out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else if (cp < 0x10000) {
            out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else {
            out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        }
    }
    return out;
}

}  // namespace zipfseq
