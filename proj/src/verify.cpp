#include "grex/verify.hpp"

#include <chrono>
#include <limits>
#include <random>

#include "grex/ext.hpp"
#include "grex/mf_oracle.hpp"

namespace grex {

namespace {

// Unbiased uniform draw from [0, n): rejection on the top remainder band.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return draw % n;
}

} // namespace

VerificationSummary verify_window(int k, Int lo, Int hi, const VerifyOptions& options) {
    // Materializing the window must stay sane even in sampled mode.
    constexpr std::uint64_t kEnumerationCap = 2'000'000;
    const std::uint64_t subset_count = binomial_capped(hi - lo + 1, k, kEnumerationCap);
    if (subset_count > kEnumerationCap) {
        fail(errc::window_too_large,
             "window holds more than " + std::to_string(kEnumerationCap) + " k-subsets");
    }
    // subset_count <= 2e6, so the square fits comfortably in 64 bits.
    const std::uint64_t total_pairs = subset_count * subset_count;
    if (!options.sample && total_pairs > options.cap) {
        fail(errc::window_too_large,
             "exhaustive run needs more than " + std::to_string(options.cap) +
                 " oracle calls; pass a sample size or raise the cap");
    }
    if (options.sample && *options.sample > options.cap) {
        fail(errc::window_too_large, "sample size exceeds the oracle-call cap of " +
                                         std::to_string(options.cap));
    }

    const auto start = std::chrono::steady_clock::now();
    const std::vector<KSubset> subsets = enumerate_window(k, lo, hi);

    VerificationSummary summary;
    summary.k = k;
    summary.lo = lo;
    summary.hi = hi;

    auto check_pair = [&](const KSubset& l, const KSubset& m) {
        const Int formula = ext_dimension(l, m);
        const Int oracle = ext_dimension_oracle(l, m);
        ++summary.pairs_checked;
        if (formula != oracle) summary.mismatches.push_back(Mismatch{l, m, formula, oracle});
    };

    if (options.sample) {
        std::mt19937_64 rng(options.seed);
        for (std::uint64_t s = 0; s < *options.sample; ++s) {
            const auto i = uniform_below(rng, subsets.size());
            const auto j = uniform_below(rng, subsets.size());
            check_pair(subsets[i], subsets[j]);
        }
    } else {
        for (const KSubset& l : subsets) {
            for (const KSubset& m : subsets) check_pair(l, m);
        }
    }

    summary.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return summary;
}

} // namespace grex
