#pragma once

#include <string>
#include <utility>
#include <vector>

#include "grex/subsets.hpp"

namespace grex {

/// The graded ideal I = (x^{k-1}, x^{k-2}y^{i_1}, ..., x y^{i_{k-2}}, y^{i_{k-1}})(i_k)
/// of R = C[x,y]/(x^k), with x in degree 1 and y in degree -1. These are
/// exactly the generically free rank-1 graded MCM modules, so the pair
/// (exponents, shift) is a complete invariant.
///
/// The exponent convention i_0 = 0 is global: exponent_at(0) == 0 always.
class GradedIdeal {
public:
    /// exponents = (i_1, ..., i_{k-1}), which must be nonnegative and
    /// nondecreasing; shift = i_k.
    GradedIdeal(int k, std::vector<Int> exponents, Int shift);

    int k() const { return k_; }
    const std::vector<Int>& exponents() const { return exponents_; }
    Int shift() const { return shift_; }

    /// i_t for t in [0, k-1], with i_0 == 0.
    Int exponent_at(int t) const;

    bool operator==(const GradedIdeal& other) const = default;

    /// Canonical rendering, e.g. "(x^2,x*y^1,y^2)(0)".
    std::string to_string() const;

private:
    int k_;
    std::vector<Int> exponents_;
    Int shift_;
};

/// The ideal I(l) with shift i_k = k-1-l_k and exponents
/// i_{k-p} = l_k - l_p - (k-p); the inverse of subset_from_ideal.
GradedIdeal ideal_from_subset(const KSubset& l);

/// The k-subset (-i_k-i_{k-1}, -i_k-i_{k-2}+1, ..., -i_k+k-1), i.e.
/// l_p = -i_k - i_{k-p} + p - 1.
KSubset subset_from_ideal(const GradedIdeal& ideal);

/// Whether x^{x_exp} y^{y_exp} lies in the underlying (unshifted) ideal:
/// y_exp >= i_{k-1-x_exp}. Requires 0 <= x_exp <= k-1 and y_exp >= 0
/// (x^a vanishes in R for a >= k).
bool contains_monomial(const GradedIdeal& ideal, Int x_exp, Int y_exp);

/// Canonicalizes a monomial generating set: for each x-degree a the minimal
/// y-exponent e(a) over generators (a', b') with a' <= a becomes i_{k-1-a}.
/// The result always contains x^{k-1} (MCM saturation). Rejects generator
/// sets without a pure y-power (x-exponent 0), since those ideals are not
/// cofinite and fall outside the rank-1 classification.
GradedIdeal normalize_generators(int k, const std::vector<std::pair<Int, Int>>& monomials,
                                 Int shift);

} // namespace grex
