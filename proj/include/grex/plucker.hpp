#pragma once

#include <cstdint>
#include <vector>

#include "grex/exact.hpp"
#include "grex/subsets.hpp"

namespace grex {

/// One summand (-1)^l p_{J' ∪ {j_l}} p_{J \ {j_l}} of a Plücker relation.
/// When j_l already lies in J', the first coordinate has a repeated index
/// and is identically zero: the term is kept but marked degenerate with
/// sign 0 (`first` then contains the repeat).
struct PluckerTerm {
    int sign = 0; // +1, -1, or 0 for degenerate terms
    std::vector<Int> first;
    std::vector<Int> second;

    bool degenerate() const { return sign == 0; }
};

/// The alternating quadratic relation indexed by a (k-1)-set J' and a
/// (k+1)-set J: sum over l of (-1)^l p_{J' ∪ {j_l}} p_{J \ {j_l}}, with the
/// coordinates labeled by increasing index sets. Each stored sign therefore
/// folds in the sign of the permutation sorting (J', j_l); the sum then
/// vanishes identically on maximal minors for every choice of J' and J.
struct PluckerRelation {
    int k = 0;
    std::vector<PluckerTerm> terms; // exactly k+1, in order of l
};

PluckerRelation plucker_relation(std::vector<Int> j_prime, std::vector<Int> j_big);

/// The k x k minor of `mat` on the columns labeled by l (in increasing
/// order), computed exactly. `columns` gives the label of each matrix
/// column.
BigRational evaluate_plucker(const RationalMatrix& mat, const std::vector<Int>& columns,
                             const KSubset& l);

/// Whether the relation evaluates to exactly zero on the given matrix.
bool verify_relation(const RationalMatrix& mat, const std::vector<Int>& columns,
                     const PluckerRelation& rel);

/// All inclusion-maximal collections of pairwise-noncrossing k-subsets of
/// {lo,...,hi}, each collection sorted, the list sorted. Exhaustive search;
/// refuses windows with more than `cap` subsets.
std::vector<std::vector<KSubset>> maximal_noncrossing(int k, Int lo, Int hi,
                                                      std::uint64_t cap = 64);

} // namespace grex
