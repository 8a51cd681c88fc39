#pragma once

#include <optional>
#include <utility>

#include "grex/staircase.hpp"
#include "grex/subsets.hpp"

namespace grex {

/// Everything the CLI reports about one pair of k-subsets. Invariants:
/// ext_dim == alpha + beta - k - intersection, compatible == (ext_dim == 0),
/// and oracle_dim (when present) == ext_dim.
struct ExtReport {
    int k;
    KSubset l;
    KSubset m;
    int alpha;
    int beta;
    int intersection;
    Int ext_dim;
    bool compatible;
    std::optional<Int> oracle_dim;
};

/// dim Ext^1(I(l), I(m)) = alpha(l,m) + beta(l,m) - k - |l ∩ m|.
/// Guards the guaranteed nonnegativity at runtime: a negative value throws
/// std::logic_error carrying both rendered grids.
Int ext_dimension(const KSubset& l, const KSubset& m);

/// ext_dimension(l, m) == 0. Defined through the formula; the crossing
/// predicate stays an independent cross-check in the tests.
bool compatible(const KSubset& l, const KSubset& m);

/// Removes the common element v from both subsets (k >= 3), yielding the
/// (k-1)-subset pair whose alpha/beta each drop by exactly one.
std::pair<KSubset, KSubset> reduce_common(const KSubset& l, const KSubset& m, Int v);

/// Assembles the full report; runs the matrix-factorization oracle too when
/// with_oracle is set.
ExtReport make_report(const KSubset& l, const KSubset& m, bool with_oracle);

} // namespace grex
