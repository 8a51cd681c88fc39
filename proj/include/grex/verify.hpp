#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "grex/subsets.hpp"

namespace grex {

/// Result of a formula-versus-oracle sweep over a window of k-subsets.
struct Mismatch {
    KSubset l;
    KSubset m;
    Int formula_dim;
    Int oracle_dim;
};

struct VerificationSummary {
    int k = 0;
    Int lo = 0;
    Int hi = 0;
    std::uint64_t pairs_checked = 0;
    std::vector<Mismatch> mismatches;
    double elapsed_ms = 0.0;

    bool passed() const { return mismatches.empty(); }
};

struct VerifyOptions {
    /// Ordered pairs to sample; nullopt means exhaustive.
    std::optional<std::uint64_t> sample;
    std::uint64_t seed = 0x5eed;
    /// Refuse exhaustive runs needing more oracle calls than this.
    std::uint64_t cap = 1'000'000;
};

/// Runs ext_dimension against ext_dimension_oracle on every (or a sampled
/// set of) ordered pair of k-subsets of {lo,...,hi}. Deterministic,
/// including the sampled variant.
VerificationSummary verify_window(int k, Int lo, Int hi, const VerifyOptions& options = {});

} // namespace grex
