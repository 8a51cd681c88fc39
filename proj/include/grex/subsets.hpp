#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "grex/errors.hpp"

namespace grex {

using Int = std::int64_t;

/// A k-subset of the integers, stored as a strictly increasing tuple
/// (l_1 < l_2 < ... < l_k). Always has k >= 2. Immutable after construction.
///
/// Elements are bounded to |v| <= 2^61 so that every difference or small
/// offset computed downstream fits in a 64-bit integer.
class KSubset {
public:
    /// Sorts the given values; rejects duplicates and fewer than 2 elements.
    explicit KSubset(std::vector<Int> values);

    int k() const { return static_cast<int>(elems_.size()); }

    /// 0-based access; elements()[i] is l_{i+1} in the 1-based notation.
    Int operator[](int i) const { return elems_[static_cast<std::size_t>(i)]; }

    const std::vector<Int>& elements() const { return elems_; }

    bool contains(Int v) const;

    bool operator==(const KSubset& other) const = default;
    /// Lexicographic; used for deterministic orderings of collections.
    bool operator<(const KSubset& other) const { return elems_ < other.elems_; }

    /// Comma-separated increasing form, e.g. "-2,0,2".
    std::string to_string() const;

    /// Inverse of to_string; accepts optional whitespace around commas.
    static KSubset parse(std::string_view text);

private:
    std::vector<Int> elems_;
};

/// True iff there are i1,i2 in l\m and j1,j2 in m\l interleaving as
/// i1 < j1 < i2 < j2 or j1 < i1 < j2 < i2. Symmetric.
bool crosses(const KSubset& l, const KSubset& m);

/// |l ∩ m|.
int intersection_size(const KSubset& l, const KSubset& m);

/// (l_1 + t, ..., l_k + t).
KSubset shift(const KSubset& l, Int t);

/// All C(hi-lo+1, k) k-subsets of {lo,...,hi} in lexicographic order.
std::vector<KSubset> enumerate_window(int k, Int lo, Int hi);

/// C(n, r), saturated at `cap` (returns cap + 1 as soon as the value would
/// exceed it). Used by enumeration drivers to guard against blowups.
std::uint64_t binomial_capped(Int n, int r, std::uint64_t cap);

} // namespace grex
