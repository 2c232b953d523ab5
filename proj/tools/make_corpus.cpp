// Builds the bundled sample corpus: an English-like token stream with a
// Zipf(1) vocabulary and a long-range exponent matched to 0.70, rendered as
// sentences. Deterministic; the committed data/corpus_en.txt is its output.
//
//   make_corpus [output-path]

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "zipfseq/dfa.hpp"
#include "zipfseq/rng.hpp"
#include "zipfseq/seqmodel.hpp"
#include "zipfseq/surrogate.hpp"

using namespace zipfseq;

namespace {

// frequent function words occupy the top ranks so the text reads naturally
const std::vector<std::string> kFunctionWords = {
    "the",  "of",    "and",  "to",   "a",     "in",   "is",    "was",
    "he",   "that",  "it",   "his",  "her",   "you",  "as",    "had",
    "with", "for",   "she",  "not",  "at",    "but",  "be",    "they",
    "have", "this",  "from", "or",   "one",   "all",  "what",  "were",
    "we",   "when",  "your", "can",  "said",  "there", "use",  "each",
    "which", "do",   "how",  "their", "if",   "will",  "up",   "other",
    "about", "out",  "many", "then", "them",  "these", "so",   "some"};

std::string make_pseudo_word(rng::Xoshiro256pp& gen) {
    static const std::vector<std::string> onsets = {
        "b", "c",  "d",  "f",  "g",  "h",  "l",  "m",  "n",  "p",
        "r", "s",  "t",  "v",  "w",  "br", "ch", "cl", "cr", "dr",
        "fl", "fr", "gr", "pl", "pr", "sh", "sl", "sp", "st", "str",
        "th", "tr", "qu", "k",  "j"};
    static const std::vector<std::string> vowels = {
        "a", "e", "i", "o", "u", "ai", "ea", "ee", "ie", "oa", "ou", "oo"};
    static const std::vector<std::string> codas = {
        "",  "",   "n",  "r",  "s",  "t",   "l",  "m",  "d",  "k",
        "p", "nd", "nt", "st", "ck", "ng",  "rn", "sh", "th", "ss"};

    const int syllables = 1 + static_cast<int>(gen.next_below(3));
    std::string w;
    for (int s = 0; s < syllables; ++s) {
        w += onsets[gen.next_below(onsets.size())];
        w += vowels[gen.next_below(vowels.size())];
        w += codas[gen.next_below(codas.size())];
    }
    return w;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string out_path = argc > 1 ? argv[1] : "data/corpus_en.txt";
    const std::size_t vocabulary = 12000;
    const std::int64_t tokens = 160000;
    const double target_alpha = 0.70;

    std::vector<std::string> labels = kFunctionWords;
    std::set<std::string> used(labels.begin(), labels.end());
    rng::Xoshiro256pp word_gen(0x5EED5EEDu);
    while (labels.size() < vocabulary) {
        std::string w = make_pseudo_word(word_gen);
        if (used.insert(w).second) labels.push_back(std::move(w));
    }

    FrequencyTable table(std::make_shared<Alphabet>(std::move(labels)),
                         synthetic_zipf_counts(vocabulary, tokens, 1.0));

    MatchConfig cfg;
    cfg.target_alpha = target_alpha;
    cfg.epsilon = 0.005;
    cfg.base_seed = 20260501;
    const auto res = match_target_exponent(table, cfg);
    std::printf("match: achieved=%.4f iterations=%d converged=%d\n",
                res.achieved_alpha, res.iterations, (int)res.converged);
    if (!res.converged) {
        std::fprintf(stderr, "corpus match did not converge\n");
        return 1;
    }

    // render as sentences: 4..28 tokens, capitalized opener, '.' terminator
    rng::Xoshiro256pp layout_gen(0xC0FFEEu);
    std::string text;
    text.reserve(static_cast<std::size_t>(tokens) * 7);
    std::size_t line_len = 0;
    std::size_t sentence_left = 0;
    bool sentence_open = false;
    const auto& seq = res.sequence;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        std::string word = seq.label_at(i);
        if (!sentence_open) {
            sentence_left = 4 + layout_gen.next_below(25);
            if (std::islower(static_cast<unsigned char>(word[0])))
                word[0] = static_cast<char>(
                    std::toupper(static_cast<unsigned char>(word[0])));
            sentence_open = true;
        }
        --sentence_left;
        const bool last_token = i + 1 == seq.size();
        if (sentence_left == 0 || last_token) {
            word += '.';
            sentence_open = false;
        }
        if (line_len > 0 && line_len + 1 + word.size() > 78) {
            text += '\n';
            line_len = 0;
        } else if (line_len > 0) {
            text += ' ';
            ++line_len;
        }
        text += word;
        line_len += word.size();
    }
    text += '\n';

    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) {
        std::fprintf(stderr, "cannot write %s\n", out_path.c_str());
        return 1;
    }
    out << text;
    out.close();
    std::printf("wrote %s (%zu bytes, %lld tokens, V=%zu)\n", out_path.c_str(),
                text.size(), static_cast<long long>(tokens), vocabulary);
    return 0;
}
