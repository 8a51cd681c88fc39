#include "grex/staircase.hpp"

#include <stdexcept>

namespace grex {

CrossingGrid::CrossingGrid(int k, GridFlavor flavor, std::vector<std::uint8_t> filled)
    : k_(k), flavor_(flavor), filled_(std::move(filled)) {
    if (k_ < 2 || filled_.size() != static_cast<std::size_t>(k_) * static_cast<std::size_t>(k_)) {
        fail(errc::bad_cardinality, "grid needs k >= 2 and k*k cells");
    }
    // Staircase check: a filled cell forces filled above and to the right.
    for (int i = 1; i <= k_; ++i) {
        for (int j = 1; j <= k_; ++j) {
            if (!this->filled(i, j)) continue;
            if (i > 1 && !this->filled(i - 1, j))
                throw std::logic_error("staircase property violated at row " +
                                       std::to_string(i) + ", col " + std::to_string(j));
            if (j < k_ && !this->filled(i, j + 1))
                throw std::logic_error("staircase property violated at row " +
                                       std::to_string(i) + ", col " + std::to_string(j));
        }
    }
}

int CrossingGrid::filled_count() const {
    int count = 0;
    for (std::uint8_t cell : filled_) count += cell != 0;
    return count;
}

std::vector<std::string> CrossingGrid::rows() const {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(k_));
    for (int i = 1; i <= k_; ++i) {
        std::string row(static_cast<std::size_t>(k_), '.');
        for (int j = 1; j <= k_; ++j) {
            if (filled(i, j)) row[static_cast<std::size_t>(j - 1)] = '#';
        }
        out.push_back(std::move(row));
    }
    return out;
}

namespace {

void require_same_k(const KSubset& l, const KSubset& m) {
    if (l.k() != m.k()) {
        fail(errc::mismatched_k, "cardinalities differ: " + std::to_string(l.k()) + " vs " +
                                     std::to_string(m.k()));
    }
}

CrossingGrid build_grid(const KSubset& l, const KSubset& m, GridFlavor flavor) {
    require_same_k(l, m);
    const int k = l.k();
    std::vector<std::uint8_t> filled(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= k; ++j) {
            const bool on = flavor == GridFlavor::A ? l[i - 1] <= m[j - 1] : l[i - 1] < m[j - 1];
            filled[static_cast<std::size_t>((i - 1) * k + (j - 1))] = on ? 1 : 0;
        }
    }
    return CrossingGrid(k, flavor, std::move(filled));
}

} // namespace

CrossingGrid grid_A(const KSubset& l, const KSubset& m) { return build_grid(l, m, GridFlavor::A); }

CrossingGrid grid_B(const KSubset& l, const KSubset& m) { return build_grid(l, m, GridFlavor::B); }

int alpha(const KSubset& l, const KSubset& m) {
    require_same_k(l, m);
    const int k = l.k();
    // D_p^+ fully filled implies the same for D_{p-1}^+, so scan upward.
    for (int p = 1; p <= k; ++p) {
        for (int i = 1; i <= p; ++i) {
            const int j = i + k - p;
            if (!(l[i - 1] <= m[j - 1])) return p - 1;
        }
    }
    return k;
}

int beta(const KSubset& l, const KSubset& m) {
    require_same_k(l, m);
    const int k = l.k();
    for (int p = 1; p <= k; ++p) {
        for (int j = 1; j <= p; ++j) {
            const int i = j + k - p;
            if (!(l[i - 1] >= m[j - 1])) return p - 1;
        }
    }
    return k;
}

std::string render_grid(const CrossingGrid& grid) {
    std::string out;
    const auto rows = grid.rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out += '\n';
        out += rows[i];
    }
    return out;
}

} // namespace grex
