#include "zipfseq/encoders.hpp"

#include <algorithm>
#include <array>
#include <istream>

namespace zipfseq {

namespace {

#include "unicode_tables.inc"

// Appends cp as UTF-8.
void utf8_append(std::string& out, char32_t cp) {
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

[[noreturn]] void bad_utf8(std::size_t offset) {
    throw Error("invalid UTF-8 at byte offset " + std::to_string(offset));
}

// Decodes one code point at byte offset i; advances i. Rejects overlong
// forms, surrogates and values beyond U+10FFFF.
char32_t utf8_next(std::string_view s, std::size_t& i) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    int extra;
    char32_t cp;
    if ((b0 & 0xE0) == 0xC0) {
        extra = 1;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        extra = 2;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        extra = 3;
        cp = b0 & 0x07;
    } else {
        bad_utf8(i);
    }
    if (i + static_cast<std::size_t>(extra) >= s.size()) bad_utf8(i);
    for (int k = 1; k <= extra; ++k) {
        const auto b = static_cast<unsigned char>(s[i + k]);
        if ((b & 0xC0) != 0x80) bad_utf8(i);
        cp = (cp << 6) | (b & 0x3F);
    }
    static constexpr char32_t min_for_extra[4] = {0, 0x80, 0x800, 0x10000};
    if (cp < min_for_extra[extra] || cp > 0x10FFFF ||
        (cp >= 0xD800 && cp <= 0xDFFF))
        bad_utf8(i);
    i += extra + 1;
    return cp;
}

}  // namespace

bool is_punctuation(char32_t cp) {
    auto it = std::upper_bound(
        std::begin(kPunctRanges), std::end(kPunctRanges), cp,
        [](char32_t v, const CpRange& r) { return v < r.lo; });
    if (it == std::begin(kPunctRanges)) return false;
    --it;
    return cp >= it->lo && cp <= it->hi;
}

bool is_whitespace(char32_t cp) {
    return std::binary_search(std::begin(kWhitespace), std::end(kWhitespace), cp);
}

char32_t fold_lowercase(char32_t cp) {
    auto it = std::lower_bound(
        std::begin(kLowerMap), std::end(kLowerMap), cp,
        [](const CpPair& p, char32_t v) { return p.from < v; });
    if (it != std::end(kLowerMap) && it->from == cp) return it->to;
    return cp;
}

std::vector<std::string> tokenize_to_strings(std::string_view text,
                                             const TokenizerOptions& opts) {
    std::vector<std::string> tokens;
    const bool as_tokens =
        opts.punctuation_mode == TokenizerOptions::PunctuationMode::as_tokens;

    std::string word;          // current word, folded
    std::string pending_punct; // strip mode: punctuation seen after word chars
    auto flush_word = [&] {
        if (!word.empty()) tokens.push_back(std::move(word));
        word.clear();
        pending_punct.clear();
    };

    std::size_t i = 0;
    while (i < text.size()) {
        const char32_t cp = utf8_next(text, i);
        if (is_whitespace(cp)) {
            flush_word();
            continue;
        }
        if (is_punctuation(cp)) {
            if (as_tokens) {
                flush_word();
                std::string p;
                utf8_append(p, cp);
                tokens.push_back(std::move(p));
            } else if (!word.empty()) {
                // internal unless it turns out to be trailing
                utf8_append(pending_punct, cp);
            }
            // leading punctuation in strip mode: dropped
            continue;
        }
        if (!pending_punct.empty()) {
            word += pending_punct;  // was internal after all
            pending_punct.clear();
        }
        utf8_append(word, opts.lowercase ? fold_lowercase(cp) : cp);
    }
    flush_word();
    return tokens;
}

SymbolSequence tokenize(std::string_view text, const TokenizerOptions& opts) {
    auto tokens = tokenize_to_strings(text, opts);

    std::vector<std::string> labels;
    std::vector<SymbolId> ids;
    ids.reserve(tokens.size());
    std::unordered_map<std::string, SymbolId> seen;
    seen.reserve(tokens.size() / 4 + 16);
    for (auto& tok : tokens) {
        auto it = seen.find(tok);
        if (it == seen.end()) {
            const auto id = static_cast<SymbolId>(labels.size());
            labels.push_back(tok);
            seen.emplace(std::move(tok), id);
            ids.push_back(id);
        } else {
            ids.push_back(it->second);
        }
    }
    if (labels.empty()) return SymbolSequence();
    return SymbolSequence(std::make_shared<Alphabet>(std::move(labels)),
                          std::move(ids));
}

const AlphabetPtr& dna_alphabet() {
    static const AlphabetPtr alpha = std::make_shared<Alphabet>(
        std::vector<std::string>{"A", "C", "G", "T"});
    return alpha;
}

FastaResult parse_fasta(std::istream& in, const DnaEncodeOptions& opts,
                        const std::optional<std::string>& record_id) {
    // id 0..3 = A,C,G,T; 0xFE = skip silently (whitespace/CR), 0xFF = non-ACGT
    std::array<std::uint8_t, 256> code{};
    code.fill(0xFF);
    const std::string_view bases = "ACGT";
    for (std::size_t b = 0; b < bases.size(); ++b) {
        code[static_cast<unsigned char>(bases[b])] = static_cast<std::uint8_t>(b);
        code[static_cast<unsigned char>(bases[b] + 32)] =
            static_cast<std::uint8_t>(b);  // lowercase
    }

    std::vector<SymbolId> ids;
    std::uint64_t skipped = 0;
    bool in_wanted_record = !record_id.has_value();
    bool saw_record = false;
    bool saw_wanted = !record_id.has_value();
    std::uint64_t line_no = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '>') {
            saw_record = true;
            if (record_id) {
                std::string id = line.substr(1);
                const auto ws = id.find_first_of(" \t");
                if (ws != std::string::npos) id.resize(ws);
                in_wanted_record = (id == *record_id);
                saw_wanted = saw_wanted || in_wanted_record;
            }
            continue;
        }
        if (!in_wanted_record) continue;
        for (std::size_t col = 0; col < line.size(); ++col) {
            const std::uint8_t c = code[static_cast<unsigned char>(line[col])];
            if (c < 4) {
                ids.push_back(c);
            } else if (opts.non_acgt_policy == DnaEncodeOptions::NonAcgtPolicy::fail) {
                throw Error("non-ACGT character '" + std::string(1, line[col]) +
                            "' at line " + std::to_string(line_no) + ", column " +
                            std::to_string(col + 1));
            } else {
                ++skipped;
            }
        }
    }
    if (record_id && !saw_wanted)
        throw Error("FASTA record not found: " + *record_id);
    if (ids.empty() && skipped == 0) {
        if (!saw_record) throw Error("no FASTA sequence lines in input");
        throw Error("FASTA input contains no bases");
    }
    return FastaResult{SymbolSequence(dna_alphabet(), std::move(ids)), skipped};
}

NumericSeries ry_encode(const SymbolSequence& dna) {
    // works for any alphabet whose labels are single bases out of {A,C,G,T}
    const auto v = dna.alphabet().size();
    std::vector<double> value_of(v);
    for (std::size_t i = 0; i < v; ++i) {
        const auto& lbl = dna.alphabet().label(static_cast<SymbolId>(i));
        if (lbl == "A" || lbl == "G")
            value_of[i] = +1.0;
        else if (lbl == "C" || lbl == "T")
            value_of[i] = -1.0;
        else
            throw Error("ry_encode: symbol outside {A,C,G,T}: " + lbl);
    }
    NumericSeries out(dna.size());
    const auto& ids = dna.ids();
    for (std::size_t i = 0; i < ids.size(); ++i) out[i] = value_of[ids[i]];
    return out;
}

}  // namespace zipfseq
