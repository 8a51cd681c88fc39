#include "grex/plucker.hpp"

#include <algorithm>

namespace grex {

PluckerRelation plucker_relation(std::vector<Int> j_prime, std::vector<Int> j_big) {
    std::sort(j_prime.begin(), j_prime.end());
    std::sort(j_big.begin(), j_big.end());
    auto has_repeat = [](const std::vector<Int>& v) {
        return std::adjacent_find(v.begin(), v.end()) != v.end();
    };
    if (has_repeat(j_prime) || has_repeat(j_big)) {
        fail(errc::duplicate_element, "index sets of a Plücker relation must be distinct");
    }
    if (j_prime.size() + 2 != j_big.size() || j_prime.size() < 1) {
        fail(errc::bad_cardinality,
             "need |J'| = k-1 and |J| = k+1 with k >= 2, got " + std::to_string(j_prime.size()) +
                 " and " + std::to_string(j_big.size()));
    }
    const int k = static_cast<int>(j_prime.size()) + 1;

    PluckerRelation rel;
    rel.k = k;
    for (std::size_t l = 0; l < j_big.size(); ++l) {
        const Int jl = j_big[l];
        PluckerTerm term;
        term.first = j_prime;
        term.first.insert(std::upper_bound(term.first.begin(), term.first.end(), jl), jl);
        term.second.reserve(j_big.size() - 1);
        for (std::size_t t = 0; t < j_big.size(); ++t) {
            if (t != l) term.second.push_back(j_big[t]);
        }
        const bool degenerate =
            std::binary_search(j_prime.begin(), j_prime.end(), jl); // repeated index => 0
        // (-1)^l, times the sign of the permutation sorting (J', j_l): one
        // transposition per element of J' exceeding j_l. Without the second
        // factor the sum does not lie in the ideal of minors whenever j_l
        // interleaves J'.
        const auto inversions = static_cast<std::size_t>(
            j_prime.end() - std::upper_bound(j_prime.begin(), j_prime.end(), jl));
        term.sign = degenerate ? 0 : ((l + inversions) % 2 == 0 ? 1 : -1);
        rel.terms.push_back(std::move(term));
    }
    return rel;
}

BigRational evaluate_plucker(const RationalMatrix& mat, const std::vector<Int>& columns,
                             const KSubset& l) {
    const std::size_t k = mat.rows();
    if (static_cast<std::size_t>(l.k()) != k) {
        fail(errc::mismatched_k, "matrix has " + std::to_string(k) + " rows but the subset has " +
                                     std::to_string(l.k()) + " elements");
    }
    RationalMatrix minor(k, k);
    for (std::size_t j = 0; j < k; ++j) {
        const Int label = l[static_cast<int>(j)];
        const auto it = std::find(columns.begin(), columns.end(), label);
        if (it == columns.end()) {
            fail(errc::column_missing, "no column labeled " + std::to_string(label));
        }
        const auto col = static_cast<std::size_t>(it - columns.begin());
        for (std::size_t i = 0; i < k; ++i) minor.at(i, j) = mat.at(i, col);
    }
    return determinant(minor);
}

bool verify_relation(const RationalMatrix& mat, const std::vector<Int>& columns,
                     const PluckerRelation& rel) {
    BigRational sum = 0;
    for (const PluckerTerm& term : rel.terms) {
        if (term.degenerate()) continue;
        const BigRational a = evaluate_plucker(mat, columns, KSubset(term.first));
        const BigRational b = evaluate_plucker(mat, columns, KSubset(term.second));
        sum += term.sign * a * b;
    }
    return sum == 0;
}

std::vector<std::vector<KSubset>> maximal_noncrossing(int k, Int lo, Int hi, std::uint64_t cap) {
    const std::uint64_t count = binomial_capped(hi - lo + 1, k, cap);
    if (count > cap) {
        fail(errc::window_too_large, "window holds more than " + std::to_string(cap) +
                                         " subsets; shrink it or raise the cap");
    }
    const std::vector<KSubset> vertices = enumerate_window(k, lo, hi);
    const std::size_t n = vertices.size();

    // Pairwise compatibility graph; maximal collections are its maximal
    // cliques, enumerated Bron-Kerbosch style over the lexicographic order.
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool ok = !crosses(vertices[i], vertices[j]);
            adj[i][j] = ok;
            adj[j][i] = ok;
        }
    }

    std::vector<std::vector<KSubset>> result;
    std::vector<std::size_t> current;
    auto extend = [&](auto&& self, std::vector<std::size_t> candidates,
                      std::vector<std::size_t> excluded) -> void {
        if (candidates.empty() && excluded.empty()) {
            std::vector<KSubset> collection;
            collection.reserve(current.size());
            for (std::size_t idx : current) collection.push_back(vertices[idx]);
            std::sort(collection.begin(), collection.end());
            result.push_back(std::move(collection));
            return;
        }
        while (!candidates.empty()) {
            const std::size_t v = candidates.front();
            candidates.erase(candidates.begin());
            std::vector<std::size_t> next_candidates, next_excluded;
            for (std::size_t u : candidates)
                if (adj[v][u]) next_candidates.push_back(u);
            for (std::size_t u : excluded)
                if (adj[v][u]) next_excluded.push_back(u);
            current.push_back(v);
            self(self, std::move(next_candidates), std::move(next_excluded));
            current.pop_back();
            excluded.push_back(v);
        }
    };
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    extend(extend, std::move(all), {});

    std::sort(result.begin(), result.end());
    return result;
}

} // namespace grex
