#pragma once

// Independent oracle for the rank-based discretisation: assigns each value
// to the symbol whose cumulative-count block contains its position among
// the order statistics (the CDF partition, computed the slow direct way).

#include <cstddef>
#include <cstdint>
#include <vector>

namespace quantile_oracle {

// For each t, symbol index i such that C_{i-1} <= |{s : z_s < z_t, or
// z_s == z_t and s < t}| < C_i, where C are cumulative counts.
inline std::vector<std::uint32_t> discretize(
    const std::vector<double>& z, const std::vector<std::int64_t>& counts) {
    const std::size_t n = z.size();
    std::vector<std::uint32_t> out(n);
    for (std::size_t t = 0; t < n; ++t) {
        std::int64_t position = 0;
        for (std::size_t s = 0; s < n; ++s)
            if (z[s] < z[t] || (z[s] == z[t] && s < t)) ++position;
        std::int64_t cum = 0;
        for (std::size_t i = 0; i < counts.size(); ++i) {
            cum += counts[i];
            if (position < cum) {
                out[t] = static_cast<std::uint32_t>(i);
                break;
            }
        }
    }
    return out;
}

}  // namespace quantile_oracle
