#pragma once

#include <string>
#include <vector>

#include "grex/subsets.hpp"

namespace grex {

enum class GridFlavor { A, B };

inline const char* flavor_name(GridFlavor f) { return f == GridFlavor::A ? "A" : "B"; }

/// k x k boolean crossing grid. Cell (i, j) — 1-based, row 1 at the top —
/// is filled iff l_i <= m_j (flavor A) or l_i < m_j (flavor B). The filled
/// and empty regions are separated by a monotone staircase path; the
/// constructor rejects fill patterns violating that.
class CrossingGrid {
public:
    CrossingGrid(int k, GridFlavor flavor, std::vector<std::uint8_t> filled);

    int k() const { return k_; }
    GridFlavor flavor() const { return flavor_; }

    /// 1-based (row, column).
    bool filled(int i, int j) const {
        return filled_[static_cast<std::size_t>((i - 1) * k_ + (j - 1))] != 0;
    }

    int filled_count() const;

    /// Row strings of '#'/'.' characters, row 1 first.
    std::vector<std::string> rows() const;

    bool operator==(const CrossingGrid& other) const = default;

private:
    int k_;
    GridFlavor flavor_;
    std::vector<std::uint8_t> filled_; // row-major
};

CrossingGrid grid_A(const KSubset& l, const KSubset& m);
CrossingGrid grid_B(const KSubset& l, const KSubset& m);

/// Number of upper diagonals D_p^+ = {(i,j) : j-i = k-p} lying entirely in
/// the filled region of A(l,m): max p with l_i <= m_j on all of D_p^+, or 0.
int alpha(const KSubset& l, const KSubset& m);

/// Number of lower diagonals D_p^- = {(i,j) : i-j = k-p} lying entirely in
/// the empty region of B(l,m): max p with l_i >= m_j on all of D_p^-, or 0.
int beta(const KSubset& l, const KSubset& m);

/// k lines of k characters, '#' filled / '.' empty, joined by '\n'
/// (no trailing newline).
std::string render_grid(const CrossingGrid& grid);

} // namespace grex
