#include "zipfseq/fft.hpp"

#include <cmath>
#include <thread>
#include <vector>

#include "zipfseq/error.hpp"

namespace zipfseq::fft {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Transforms at or below this size run the plain iterative kernel; larger
// power-of-two transforms are split depth-first so the working set of each
// leaf stays cache resident (2^18 complex doubles = 4 MiB).
constexpr std::size_t kIterativeMax = std::size_t{1} << 18;

// Independent sub-transforms and aligned combine chunks may run on worker
// threads above this size; the arithmetic per element is identical either
// way, so results do not depend on the thread count.
constexpr std::size_t kParallelMin = std::size_t{1} << 19;

unsigned worker_count() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : (hw > 4 ? 4 : hw);
}

// Runs fn(i) for i < count, one thread per region when they are big enough.
template <typename Fn>
void run_regions(std::size_t count, std::size_t region_size, Fn&& fn) {
    if (worker_count() < 2 || region_size < kParallelMin) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(count);
    for (std::size_t i = 0; i < count; ++i) pool.emplace_back(fn, i);
    for (auto& t : pool) t.join();
}

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// n = radix * 2^k with radix in {1, 3, 5}; returns radix or 0 if unsupported.
std::size_t split_radix_factor(std::size_t n) {
    if (is_pow2(n)) return 1;
    if (n % 3 == 0 && is_pow2(n / 3)) return 3;
    if (n % 5 == 0 && is_pow2(n / 5)) return 5;
    return 0;
}

// Twiddle table w[j] = exp(sign * 2*pi*i * j / n) for j < n/2. Built by
// recurrence with a periodic polar() refresh to keep the drift at a few ulp.
std::vector<std::complex<double>> make_twiddles(std::size_t n, double sign) {
    std::vector<std::complex<double>> w(n / 2);
    const double step = sign * kTwoPi / static_cast<double>(n);
    const std::complex<double> mul = std::polar(1.0, step);
    std::complex<double> cur(1.0, 0.0);
    for (std::size_t j = 0; j < w.size(); ++j) {
        if ((j & 63u) == 0) cur = std::polar(1.0, step * static_cast<double>(j));
        w[j] = cur;
        cur *= mul;
    }
    return w;
}

// Iterative radix-2 DIT; w must hold n/2 twiddles for this n.
void fft_pow2_iter(std::complex<double>* a, std::size_t n,
                   const std::vector<std::complex<double>>& w) {
    if (n <= 1) return;
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len / 2;
        const std::size_t stride = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < half; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + half] * w[k * stride];
                a[i + k] = u + v;
                a[i + k + half] = u - v;
            }
        }
    }
}

// Generic decimation-in-time combine: a[k] = sum_s W_n^{k s} sub[s][k mod m].
// The twiddle recurrence restarts from polar() on every 256-aligned k, so
// splitting the range at those boundaries changes nothing in the values.
template <std::size_t MaxRadix>
void dit_combine_range(std::complex<double>* out, const std::complex<double>* sub,
                       std::size_t n, std::size_t radix, double sign,
                       std::size_t k_begin, std::size_t k_end) {
    const std::size_t m = n / radix;
    const double step = sign * kTwoPi / static_cast<double>(n);
    std::complex<double> tw[MaxRadix], twmul[MaxRadix];
    for (std::size_t s = 1; s < radix; ++s)
        twmul[s] = std::polar(1.0, step * static_cast<double>(s));
    for (std::size_t k = k_begin; k < k_end; ++k) {
        if ((k & 255u) == 0) {
            for (std::size_t s = 1; s < radix; ++s)
                tw[s] = std::polar(1.0, step * static_cast<double>(s) *
                                            static_cast<double>(k));
        }
        const std::size_t q = k & (m - 1);
        std::complex<double> acc = sub[q];
        for (std::size_t s = 1; s < radix; ++s) acc += tw[s] * sub[s * m + q];
        out[k] = acc;
        for (std::size_t s = 1; s < radix; ++s) tw[s] *= twmul[s];
    }
}

template <std::size_t MaxRadix>
void dit_combine(std::complex<double>* out, const std::complex<double>* sub,
                 std::size_t n, std::size_t radix, double sign) {
    const unsigned workers = worker_count();
    if (workers < 2 || n < kParallelMin) {
        dit_combine_range<MaxRadix>(out, sub, n, radix, sign, 0, n);
        return;
    }
    // chunk boundaries on the 256-point refresh grid
    const std::size_t chunk = ((n / workers) + 255u) & ~std::size_t{255};
    std::vector<std::thread> pool;
    for (std::size_t begin = 0; begin < n; begin += chunk) {
        const std::size_t end = std::min(n, begin + chunk);
        pool.emplace_back([=] {
            dit_combine_range<MaxRadix>(out, sub, n, radix, sign, begin, end);
        });
    }
    for (auto& t : pool) t.join();
}

// Power-of-two transform; data in a, scratch of equal length available.
// Large sizes split into four interleaved quarters (gathered into scratch so
// each quarter is contiguous), recurse with the roles of the buffers
// swapped, and combine back into a in a single streaming pass. Quarters are
// independent, so the top level may fan them out to threads.
void fft_pow2_blocked(std::complex<double>* a, std::complex<double>* scratch,
                      std::size_t n, double sign, bool allow_threads) {
    if (n <= kIterativeMax) {
        const auto w = make_twiddles(n, sign);
        fft_pow2_iter(a, n, w);
        return;
    }
    const std::size_t radix = 4;
    const std::size_t m = n / radix;
    // phase 1: gather every quarter (a is read-only here); phase 2: each
    // quarter recurses with its slice of a as scratch. The phases must not
    // overlap: the gathers read positions of a across all quarter slices.
    auto gather = [&](std::size_t s) {
        std::complex<double>* dst = scratch + s * m;
        const std::complex<double>* src = a + s;
        for (std::size_t t = 0; t < m; ++t) dst[t] = src[t * radix];
    };
    auto recurse = [&](std::size_t s) {
        fft_pow2_blocked(scratch + s * m, a + s * m, m, sign, false);
    };
    if (allow_threads) {
        run_regions(radix, m, gather);
        run_regions(radix, m, recurse);
    } else {
        for (std::size_t s = 0; s < radix; ++s) gather(s);
        for (std::size_t s = 0; s < radix; ++s) recurse(s);
    }
    dit_combine<4>(a, scratch, n, radix, sign);
}

void transform(std::complex<double>* a, std::size_t n, double sign) {
    if (n <= 1) return;
    const std::size_t radix = split_radix_factor(n);
    if (radix == 0) throw Error("fft: unsupported size " + std::to_string(n));

    if (radix == 1) {
        if (n <= kIterativeMax) {
            const auto w = make_twiddles(n, sign);
            fft_pow2_iter(a, n, w);
        } else {
            std::vector<std::complex<double>> scratch(n);
            fft_pow2_blocked(a, scratch.data(), n, sign, true);
        }
        return;
    }

    // 3/5-radix first stage: m-point sub-FFTs over the strided residue
    // classes, then one combining pass. Gathers complete before any
    // sub-transform may reuse a as scratch.
    const std::size_t m = n / radix;
    std::vector<std::complex<double>> sub(n);
    run_regions(radix, m, [&](std::size_t s) {
        for (std::size_t t = 0; t < m; ++t) sub[s * m + t] = a[t * radix + s];
    });
    if (m <= kIterativeMax) {
        const auto wm = make_twiddles(m, sign);
        for (std::size_t s = 0; s < radix; ++s)
            fft_pow2_iter(sub.data() + s * m, m, wm);
    } else {
        run_regions(radix, m, [&](std::size_t s) {
            fft_pow2_blocked(sub.data() + s * m, a + s * m, m, sign, false);
        });
    }
    dit_combine<5>(a, sub.data(), n, radix, sign);
}

}  // namespace

std::size_t good_size(std::size_t minimum) {
    if (minimum <= 1) return 1;
    std::size_t best = 0;
    for (std::size_t base : {std::size_t{1}, std::size_t{3}, std::size_t{5}}) {
        std::size_t n = base;
        while (n < minimum) {
            if (n > (static_cast<std::size_t>(-1) >> 1)) { n = 0; break; }
            n <<= 1;
        }
        if (n != 0 && (best == 0 || n < best)) best = n;
    }
    if (best == 0) throw Error("fft: size out of range");
    return best;
}

void forward(std::complex<double>* data, std::size_t n) { transform(data, n, -1.0); }

void inverse(std::complex<double>* data, std::size_t n) { transform(data, n, +1.0); }

}  // namespace zipfseq::fft
