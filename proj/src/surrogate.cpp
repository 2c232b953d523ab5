#include "zipfseq/surrogate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "zipfseq/encoders.hpp"
#include "zipfseq/fgn.hpp"
#include "zipfseq/rng.hpp"

namespace zipfseq {

namespace detail {

// Indices of z in ascending value order, equal values in index order (the
// sorted order of (value, index) pairs is unique, so the parallel split
// cannot change the result).
std::vector<std::uint64_t> argsort_by_value(const NumericSeries& z) {
    const std::size_t n = z.size();
    std::vector<std::pair<double, std::uint64_t>> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = {z[i], i};
    if (n >= (std::size_t{1} << 16) && std::thread::hardware_concurrency() > 1) {
        const auto mid = order.begin() + static_cast<std::ptrdiff_t>(n / 2);
        std::thread lower([&] { std::sort(order.begin(), mid); });
        std::sort(mid, order.end());
        lower.join();
        std::inplace_merge(order.begin(), mid, order.end());
    } else {
        std::sort(order.begin(), order.end());
    }
    std::vector<std::uint64_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = order[i].second;
    return perm;
}

}  // namespace detail

SymbolSequence discretize_rank_based(const NumericSeries& z,
                                     const FrequencyTable& table) {
    const std::size_t n = z.size();
    if (static_cast<std::int64_t>(n) != table.total())
        throw Error("discretize: series length " + std::to_string(n) +
                    " != table total " + std::to_string(table.total()));
    for (double v : z)
        if (!std::isfinite(v)) throw Error("discretize: non-finite value in series");

    // ascending argsort of z, ties broken by original index
    std::vector<std::uint64_t> perm = detail::argsort_by_value(z);

    // walk the sorted positions and hand out rank ids block by block
    std::vector<SymbolId> ids(n);
    const auto& counts = table.counts();
    std::size_t rank = 0;
    std::int64_t left = counts[0];
    for (std::size_t j = 0; j < n; ++j) {
        while (left == 0) left = counts[++rank];
        ids[perm[j]] = static_cast<SymbolId>(rank);
        --left;
    }
    return SymbolSequence(table.alphabet_ptr(), std::move(ids));
}

SymbolSequence generate_surrogate(const FrequencyTable& table, double alpha0,
                                  std::uint64_t seed) {
    FgnConfig cfg;
    cfg.n = static_cast<std::size_t>(table.total());
    cfg.alpha0 = alpha0;
    cfg.seed = seed;
    return discretize_rank_based(generate_fgn(cfg), table);
}

NumericSeries numerify(const SymbolSequence& seq, const FrequencyTable& table,
                       MeasurementEncoding encoding) {
    switch (encoding) {
        case MeasurementEncoding::rank_value:
            return zipf_rank_encode(seq, table);
        case MeasurementEncoding::ry_walk:
            return ry_encode(seq);
    }
    throw Error("unknown measurement encoding");
}

SurrogateResult match_target_exponent(const FrequencyTable& table,
                                      const MatchConfig& cfg) {
    const auto [lo0, hi0] = cfg.bracket;
    if (!(lo0 >= 0.5) || !(lo0 < hi0) || !(hi0 < 1.0))
        throw Error("match: bracket must satisfy 0.5 <= lo < hi < 1");
    if (!(cfg.target_alpha >= 0.5) || !(cfg.target_alpha < 1.0))
        throw Error("match: target alpha must be in [0.5, 1)");
    if (!(cfg.epsilon > 0.0)) throw Error("match: epsilon must be > 0");
    if (cfg.max_iters < 1) throw Error("match: max_iters must be >= 1");

    SurrogateResult res;
    double lo = lo0, hi = hi0;
    std::uint64_t seed_index = 0;
    std::uint64_t seed = rng::derive_seed(cfg.base_seed, seed_index);
    res.seeds_used.push_back(seed);

    double best_err = std::numeric_limits<double>::infinity();
    int stall = 0;
    // per-seed response history for the monotonicity check
    std::vector<std::pair<double, double>> history;

    double alpha0 = std::clamp(cfg.target_alpha, lo, hi);
    bool ceiling_measured = false;  // alpha_S evaluated at the original hi
    double ceiling_alpha_s = 0.0;

    for (int iter = 1; iter <= cfg.max_iters; ++iter) {
        SymbolSequence s = generate_surrogate(table, alpha0, seed);
        const double alpha_s =
            dfa_exponent(numerify(s, table, cfg.encoding), cfg.dfa).alpha;

        IterationRecord rec;
        rec.alpha0 = alpha0;
        rec.alpha_s = alpha_s;
        rec.seed = seed;
        // the response should be non-decreasing in alpha0 for a fixed seed
        constexpr double slack = 1e-3;
        for (const auto& [a0, as] : history) {
            if ((a0 < alpha0 && as > alpha_s + slack) ||
                (a0 > alpha0 && as < alpha_s - slack)) {
                rec.non_monotone = true;
                break;
            }
        }
        history.emplace_back(alpha0, alpha_s);
        res.trace.push_back(rec);
        res.iterations = iter;

        const double err = std::abs(alpha_s - cfg.target_alpha);
        if (err < best_err) {
            best_err = err;
            res.sequence = std::move(s);
            res.achieved_alpha = alpha_s;
            res.final_alpha0 = alpha0;
            stall = 0;
        } else {
            ++stall;
        }

        if (err < cfg.epsilon) {
            res.converged = true;
            return res;
        }

        if (alpha0 >= hi0 - 1e-12) {
            ceiling_measured = true;
            ceiling_alpha_s = alpha_s;
        }

        if (alpha_s < cfg.target_alpha)
            lo = alpha0;
        else
            hi = alpha0;

        const bool bracket_spent = (hi - lo) < 1e-3;
        if (bracket_spent && hi >= hi0 - 1e-9) {
            // the search ran into the top of the bracket: measure hi itself
            // before deciding whether the target is out of reach
            if (!ceiling_measured) {
                alpha0 = hi0;
                continue;
            }
            if (ceiling_alpha_s < cfg.target_alpha)
                throw Error("target unreachable: alpha_S at bracket top " +
                            std::to_string(hi0) + " stays below target " +
                            std::to_string(cfg.target_alpha));
        }

        // a non-monotone response means this realisation's curve cannot be
        // bisected around the target; move on to a fresh seed, as on a stall
        if (stall >= cfg.reseed_after || bracket_spent || rec.non_monotone) {
            ++seed_index;
            seed = rng::derive_seed(cfg.base_seed, seed_index);
            res.seeds_used.push_back(seed);
            lo = lo0;
            hi = hi0;
            history.clear();
            stall = 0;
            ceiling_measured = false;
            alpha0 = std::clamp(cfg.target_alpha, lo, hi);
            continue;
        }
        alpha0 = 0.5 * (lo + hi);
    }

    res.converged = false;
    return res;
}

}  // namespace zipfseq
