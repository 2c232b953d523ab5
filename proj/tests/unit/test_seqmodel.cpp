#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "support/test_util.hpp"
#include "zipfseq/seqmodel.hpp"

using namespace zipfseq;

namespace {

SymbolSequence seq_of(const std::vector<std::string>& tokens) {
    std::vector<std::string> labels;
    std::vector<SymbolId> ids;
    for (const auto& t : tokens) {
        auto it = std::find(labels.begin(), labels.end(), t);
        if (it == labels.end()) {
            ids.push_back(static_cast<SymbolId>(labels.size()));
            labels.push_back(t);
        } else {
            ids.push_back(static_cast<SymbolId>(it - labels.begin()));
        }
    }
    return SymbolSequence(std::make_shared<Alphabet>(std::move(labels)),
                          std::move(ids));
}

}  // namespace

TEST_CASE("alphabet rejects duplicates and finds labels") {
    CHECK_THROWS_AS(Alphabet({"a", "b", "a"}), Error);
    Alphabet a({"x", "y"});
    CHECK(a.size() == 2);
    CHECK(*a.find("y") == 1);
    CHECK(!a.find("z").has_value());
}

TEST_CASE("build_frequency_table ranks by count") {
    const auto t = build_frequency_table(seq_of({"a", "b", "a", "c", "a", "b"}));
    CHECK(t.vocabulary_size() == 3);
    CHECK(t.alphabet().label(0) == "a");
    CHECK(t.alphabet().label(1) == "b");
    CHECK(t.alphabet().label(2) == "c");
    CHECK(t.counts() == std::vector<std::int64_t>{3, 2, 1});
    CHECK(t.total() == 6);
}

TEST_CASE("frequency ties break by first occurrence") {
    const auto t = build_frequency_table(seq_of({"x", "y"}));
    CHECK(t.alphabet().label(0) == "x");
    CHECK(t.alphabet().label(1) == "y");
    CHECK(t.counts() == std::vector<std::int64_t>{1, 1});
}

TEST_CASE("single repeated symbol") {
    const auto t = build_frequency_table(seq_of({"q", "q", "q", "q", "q"}));
    CHECK(t.vocabulary_size() == 1);
    CHECK(t.counts() == std::vector<std::int64_t>{5});
    CHECK(t.total() == 5);
}

TEST_CASE("empty sequence is an error") {
    CHECK_THROWS_WITH_AS(build_frequency_table(SymbolSequence()), "empty input",
                         Error);
}

TEST_CASE("zipf_rank_encode substitutes ranks") {
    const auto s = seq_of({"a", "b", "a", "c", "a", "b"});
    const auto t = build_frequency_table(s);
    CHECK(zipf_rank_encode(s, t) == NumericSeries{1, 2, 1, 3, 1, 2});
}

TEST_CASE("constant sequence encodes to ones") {
    const auto s = seq_of({"z", "z", "z"});
    const auto t = build_frequency_table(s);
    CHECK(zipf_rank_encode(s, t) == NumericSeries{1, 1, 1});
}

TEST_CASE("rank encode/decode round trip") {
    const auto s = seq_of({"u", "v", "u", "w", "w", "u", "v"});
    const auto t = build_frequency_table(s);
    const auto decoded = zipf_rank_decode(zipf_rank_encode(s, t), t);
    REQUIRE(decoded.size() == s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        CHECK(decoded.label_at(i) == s.label_at(i));
}

TEST_CASE("out-of-vocabulary symbol names the offender") {
    const auto s = seq_of({"a", "b"});
    const auto t = build_frequency_table(seq_of({"a", "a"}));
    CHECK_THROWS_WITH_AS(zipf_rank_encode(s, t),
                         "symbol not in frequency table: b", Error);
}

TEST_CASE("counts sum to sequence length and histogram matches table") {
    rng::Xoshiro256pp gen(5150);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::string> tokens;
        const std::size_t n = 50 + gen.next_below(400);
        for (std::size_t i = 0; i < n; ++i)
            tokens.push_back("t" + std::to_string(gen.next_below(30)));
        const auto s = seq_of(tokens);
        const auto t = build_frequency_table(s);

        CHECK(std::accumulate(t.counts().begin(), t.counts().end(),
                              std::int64_t{0}) ==
              static_cast<std::int64_t>(s.size()));
        CHECK(std::is_sorted(t.counts().rbegin(), t.counts().rend()));

        // histogram of encoded ranks = counts by rank
        const auto ranks = zipf_rank_encode(s, t);
        std::vector<std::int64_t> h(t.vocabulary_size(), 0);
        for (double r : ranks) ++h[static_cast<std::size_t>(r) - 1];
        CHECK(h == t.counts());
    }
}

TEST_CASE("rank order invariant under input permutation") {
    auto tokens = std::vector<std::string>{"m", "n", "m", "o", "m", "n", "p",
                                           "m", "n", "o"};
    const auto t1 = build_frequency_table(seq_of(tokens));
    std::reverse(tokens.begin(), tokens.end());
    const auto t2 = build_frequency_table(seq_of(tokens));
    CHECK(t1.counts() == t2.counts());
    // symbol -> count map is permutation invariant even when tied ranks swap
    for (std::size_t r = 0; r < t1.vocabulary_size(); ++r) {
        const auto& lbl = t1.alphabet().label(static_cast<SymbolId>(r));
        const auto r2 = t2.alphabet().find(lbl);
        REQUIRE(r2.has_value());
        CHECK(t2.counts()[*r2] == t1.counts()[r]);
    }
}

TEST_CASE("synthetic zipf counts are exact and ordered") {
    for (auto [v, n] : std::vector<std::pair<std::size_t, std::int64_t>>{
             {1, 5}, {10, 10}, {100, 5000}, {10000, 100000}}) {
        const auto counts = synthetic_zipf_counts(v, n, 1.0);
        CHECK(counts.size() == v);
        CHECK(std::accumulate(counts.begin(), counts.end(), std::int64_t{0}) == n);
        CHECK(std::is_sorted(counts.rbegin(), counts.rend()));
        CHECK(counts.back() >= 1);
    }
    CHECK_THROWS_AS(synthetic_zipf_counts(10, 5, 1.0), Error);
}
