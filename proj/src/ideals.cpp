#include "grex/ideals.hpp"

#include <algorithm>
#include <limits>

namespace grex {

GradedIdeal::GradedIdeal(int k, std::vector<Int> exponents, Int shift)
    : k_(k), exponents_(std::move(exponents)), shift_(shift) {
    if (k_ < 2) fail(errc::too_small, "ideal needs k >= 2, got " + std::to_string(k_));
    if (exponents_.size() != static_cast<std::size_t>(k_ - 1)) {
        fail(errc::bad_cardinality, "expected " + std::to_string(k_ - 1) + " exponents, got " +
                                        std::to_string(exponents_.size()));
    }
    Int prev = 0;
    for (Int e : exponents_) {
        if (e < prev) {
            fail(errc::exponent_out_of_range,
                 "exponents must be nonnegative and nondecreasing");
        }
        prev = e;
    }
}

Int GradedIdeal::exponent_at(int t) const {
    if (t < 0 || t >= k_) {
        fail(errc::exponent_out_of_range, "exponent index " + std::to_string(t) +
                                              " outside [0," + std::to_string(k_ - 1) + "]");
    }
    return t == 0 ? 0 : exponents_[static_cast<std::size_t>(t - 1)];
}

std::string GradedIdeal::to_string() const {
    std::string out = "(";
    for (int t = 0; t < k_; ++t) {
        if (t) out += ',';
        const Int xe = k_ - 1 - t;
        const Int ye = exponent_at(t);
        std::string mono;
        if (xe == 1)
            mono = "x";
        else if (xe > 1)
            mono = "x^" + std::to_string(xe);
        if (ye > 0) {
            if (!mono.empty()) mono += '*';
            mono += "y^" + std::to_string(ye);
        }
        if (mono.empty()) mono = "1";
        out += mono;
    }
    out += ")(" + std::to_string(shift_) + ")";
    return out;
}

GradedIdeal ideal_from_subset(const KSubset& l) {
    const int k = l.k();
    const Int lk = l[k - 1];
    std::vector<Int> exponents(static_cast<std::size_t>(k - 1));
    // i_{k-p} = l_k - l_p - (k-p) for p = 1..k-1
    for (int p = 1; p < k; ++p) {
        exponents[static_cast<std::size_t>(k - p - 1)] = lk - l[p - 1] - (k - p);
    }
    return GradedIdeal(k, std::move(exponents), k - 1 - lk);
}

KSubset subset_from_ideal(const GradedIdeal& ideal) {
    const int k = ideal.k();
    std::vector<Int> values(static_cast<std::size_t>(k));
    for (int p = 1; p <= k; ++p) {
        values[static_cast<std::size_t>(p - 1)] =
            -ideal.shift() - ideal.exponent_at(k - p) + p - 1;
    }
    return KSubset(std::move(values));
}

bool contains_monomial(const GradedIdeal& ideal, Int x_exp, Int y_exp) {
    const int k = ideal.k();
    if (x_exp < 0 || x_exp >= k) {
        fail(errc::exponent_out_of_range, "x-exponent " + std::to_string(x_exp) +
                                              " outside [0," + std::to_string(k - 1) + "]");
    }
    if (y_exp < 0) {
        fail(errc::exponent_out_of_range, "negative y-exponent " + std::to_string(y_exp));
    }
    return y_exp >= ideal.exponent_at(static_cast<int>(k - 1 - x_exp));
}

GradedIdeal normalize_generators(int k, const std::vector<std::pair<Int, Int>>& monomials,
                                 Int shift) {
    if (k < 2) fail(errc::too_small, "ideal needs k >= 2, got " + std::to_string(k));
    bool has_y_power = false;
    for (const auto& [a, b] : monomials) {
        if (a < 0 || a >= k) {
            fail(errc::exponent_out_of_range,
                 "generator x-exponent " + std::to_string(a) + " outside [0," +
                     std::to_string(k - 1) + "]");
        }
        if (b < 0) {
            fail(errc::exponent_out_of_range,
                 "generator y-exponent " + std::to_string(b) + " is negative");
        }
        if (a == 0) has_y_power = true;
    }
    if (!has_y_power) {
        fail(errc::not_cofinite,
             "no generator with x-exponent 0; the ideal contains no power of y");
    }
    // e(a) = min y-exponent reachable at x-degree a; nonincreasing in a.
    std::vector<Int> exponents(static_cast<std::size_t>(k - 1));
    for (int a = 0; a <= k - 2; ++a) {
        Int e = std::numeric_limits<Int>::max();
        for (const auto& [ga, gb] : monomials) {
            if (ga <= a) e = std::min(e, gb);
        }
        exponents[static_cast<std::size_t>(k - 2 - a)] = e; // i_{k-1-a} = e(a)
    }
    return GradedIdeal(k, std::move(exponents), shift);
}

} // namespace grex
