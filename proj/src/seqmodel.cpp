#include "zipfseq/seqmodel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace zipfseq {

Alphabet::Alphabet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw Error("alphabet must contain at least one symbol");
    index_.reserve(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        auto [it, inserted] = index_.emplace(labels_[i], static_cast<SymbolId>(i));
        if (!inserted) throw Error("duplicate alphabet symbol: " + labels_[i]);
    }
}

std::optional<SymbolId> Alphabet::find(std::string_view label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

SymbolSequence::SymbolSequence(AlphabetPtr alphabet, std::vector<SymbolId> ids)
    : alphabet_(std::move(alphabet)), ids_(std::move(ids)) {
    if (!alphabet_) throw Error("symbol sequence requires an alphabet");
    const auto v = alphabet_->size();
    for (SymbolId id : ids_)
        if (id >= v) throw Error("symbol id out of range of alphabet");
}

FrequencyTable::FrequencyTable(AlphabetPtr rank_alphabet,
                               std::vector<std::int64_t> counts)
    : rank_alphabet_(std::move(rank_alphabet)), counts_(std::move(counts)) {
    if (!rank_alphabet_ || rank_alphabet_->size() != counts_.size())
        throw Error("frequency table: alphabet/counts size mismatch");
    if (counts_.empty()) throw Error("frequency table must be non-empty");
    total_ = 0;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (counts_[i] < 1) throw Error("frequency table counts must be >= 1");
        if (i > 0 && counts_[i] > counts_[i - 1])
            throw Error("frequency table counts must be non-increasing");
        total_ += counts_[i];
    }
}

FrequencyTable build_frequency_table(const SymbolSequence& seq) {
    if (seq.empty()) throw Error("empty input");
    const std::size_t v = seq.alphabet().size();

    std::vector<std::int64_t> counts(v, 0);
    std::vector<std::size_t> first_seen(v, seq.size());
    const auto& ids = seq.ids();
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (counts[ids[i]]++ == 0) first_seen[ids[i]] = i;
    }

    std::vector<SymbolId> order;
    order.reserve(v);
    for (std::size_t i = 0; i < v; ++i)
        if (counts[i] > 0) order.push_back(static_cast<SymbolId>(i));
    std::sort(order.begin(), order.end(), [&](SymbolId a, SymbolId b) {
        if (counts[a] != counts[b]) return counts[a] > counts[b];
        if (first_seen[a] != first_seen[b]) return first_seen[a] < first_seen[b];
        return seq.alphabet().label(a) < seq.alphabet().label(b);
    });

    std::vector<std::string> ranked_labels;
    std::vector<std::int64_t> ranked_counts;
    ranked_labels.reserve(order.size());
    ranked_counts.reserve(order.size());
    for (SymbolId id : order) {
        ranked_labels.push_back(seq.alphabet().label(id));
        ranked_counts.push_back(counts[id]);
    }

    FrequencyTable table(std::make_shared<Alphabet>(std::move(ranked_labels)),
                         std::move(ranked_counts));
    table.source_alphabet_ = seq.alphabet_ptr();
    table.source_to_rank_.assign(v, static_cast<SymbolId>(order.size()));
    for (std::size_t r = 0; r < order.size(); ++r)
        table.source_to_rank_[order[r]] = static_cast<SymbolId>(r);
    return table;
}

NumericSeries zipf_rank_encode(const SymbolSequence& seq,
                               const FrequencyTable& table) {
    NumericSeries out(seq.size());
    const auto& ids = seq.ids();

    if (seq.alphabet_ptr() == table.source_alphabet_ptr() &&
        !table.source_to_rank_index().empty()) {
        const auto& to_rank = table.source_to_rank_index();
        const SymbolId v = static_cast<SymbolId>(table.vocabulary_size());
        for (std::size_t i = 0; i < ids.size(); ++i) {
            const SymbolId r = to_rank[ids[i]];
            if (r >= v)
                throw Error("symbol not in frequency table: " +
                            seq.alphabet().label(ids[i]));
            out[i] = static_cast<double>(r) + 1.0;
        }
        return out;
    }

    if (seq.alphabet_ptr() == table.alphabet_ptr()) {
        // sequence already lives on the rank alphabet: id == rank - 1
        for (std::size_t i = 0; i < ids.size(); ++i)
            out[i] = static_cast<double>(ids[i]) + 1.0;
        return out;
    }

    // translate by label, one lookup per distinct source symbol
    const std::size_t v = seq.alphabet().size();
    std::vector<double> rank_of(v, 0.0);
    for (std::size_t i = 0; i < v; ++i) {
        const auto& lbl = seq.alphabet().label(static_cast<SymbolId>(i));
        if (auto r = table.alphabet().find(lbl))
            rank_of[i] = static_cast<double>(*r) + 1.0;
    }
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const double r = rank_of[ids[i]];
        if (r == 0.0)
            throw Error("symbol not in frequency table: " +
                        seq.alphabet().label(ids[i]));
        out[i] = r;
    }
    return out;
}

SymbolSequence zipf_rank_decode(const NumericSeries& ranks,
                                const FrequencyTable& table) {
    std::vector<SymbolId> ids(ranks.size());
    const double v = static_cast<double>(table.vocabulary_size());
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        const double r = ranks[i];
        if (!(r >= 1.0) || r > v || r != std::floor(r))
            throw Error("rank value outside table range");
        ids[i] = static_cast<SymbolId>(r) - 1;
    }
    return SymbolSequence(table.alphabet_ptr(), std::move(ids));
}

std::vector<std::int64_t> synthetic_zipf_counts(std::size_t vocabulary,
                                                std::int64_t total,
                                                double gamma) {
    if (vocabulary == 0) throw Error("vocabulary must be >= 1");
    if (total < static_cast<std::int64_t>(vocabulary))
        throw Error("total must be >= vocabulary (every count >= 1)");

    // weight w_r = r^-gamma; find scale C with sum max(1, floor(C w_r)) <= total,
    // then hand out the remainder one unit per top rank (keeps the order).
    std::vector<double> w(vocabulary);
    for (std::size_t r = 0; r < vocabulary; ++r)
        w[r] = std::pow(static_cast<double>(r + 1), -gamma);

    auto total_for = [&](double scale) {
        std::int64_t s = 0;
        for (double wr : w) {
            const double c = std::floor(scale * wr);
            s += c < 1.0 ? 1 : static_cast<std::int64_t>(c);
        }
        return s;
    };

    double lo = 0.0, hi = 1.0;
    while (total_for(hi) < total) hi *= 2.0;
    for (int iter = 0; iter < 200 && hi - lo > 1e-9 * hi; ++iter) {
        const double mid = 0.5 * (lo + hi);
        (total_for(mid) <= total ? lo : hi) = mid;
    }

    std::vector<std::int64_t> counts(vocabulary);
    std::int64_t sum = 0;
    for (std::size_t r = 0; r < vocabulary; ++r) {
        const double c = std::floor(lo * w[r]);
        counts[r] = c < 1.0 ? 1 : static_cast<std::int64_t>(c);
        sum += counts[r];
    }
    std::int64_t rest = total - sum;
    if (rest < 0) throw Error("zipf count construction failed");
    for (std::size_t r = 0; rest > 0; r = (r + 1) % vocabulary) {
        ++counts[r];
        --rest;
    }
    // the +1 sweep preserves non-increasing order because it always fills
    // ranks left to right
    return counts;
}

}  // namespace zipfseq
