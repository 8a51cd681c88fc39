#include "grex/ext.hpp"

#include <stdexcept>

#include "grex/mf_oracle.hpp"

namespace grex {

Int ext_dimension(const KSubset& l, const KSubset& m) {
    const int a = alpha(l, m);
    const int b = beta(l, m);
    const Int dim = Int(a) + Int(b) - l.k() - intersection_size(l, m);
    if (dim < 0) {
        // Cannot happen for correct alpha/beta; if it fires, an indexing
        // convention broke somewhere. Dump both grids for the post-mortem.
        throw std::logic_error("negative Ext dimension " + std::to_string(dim) + " for l=" +
                               l.to_string() + ", m=" + m.to_string() + "\nA(l,m):\n" +
                               render_grid(grid_A(l, m)) + "\nB(l,m):\n" +
                               render_grid(grid_B(l, m)));
    }
    return dim;
}

bool compatible(const KSubset& l, const KSubset& m) { return ext_dimension(l, m) == 0; }

std::pair<KSubset, KSubset> reduce_common(const KSubset& l, const KSubset& m, Int v) {
    if (l.k() != m.k()) {
        fail(errc::mismatched_k, "cardinalities differ: " + std::to_string(l.k()) + " vs " +
                                     std::to_string(m.k()));
    }
    if (!l.contains(v) || !m.contains(v)) {
        fail(errc::not_common, std::to_string(v) + " is not a common element of " +
                                   l.to_string() + " and " + m.to_string());
    }
    if (l.k() == 2) {
        fail(errc::degenerate_k, "cannot reduce a pair of 2-subsets; the result would have k=1");
    }
    auto drop = [v](const KSubset& s) {
        std::vector<Int> values;
        values.reserve(static_cast<std::size_t>(s.k() - 1));
        for (Int x : s.elements()) {
            if (x != v) values.push_back(x);
        }
        return KSubset(std::move(values));
    };
    return {drop(l), drop(m)};
}

ExtReport make_report(const KSubset& l, const KSubset& m, bool with_oracle) {
    ExtReport report{l.k(), l, m,  alpha(l, m), beta(l, m), intersection_size(l, m),
                     0,     false, std::nullopt};
    report.ext_dim = ext_dimension(l, m);
    report.compatible = report.ext_dim == 0;
    if (with_oracle) report.oracle_dim = ext_dimension_oracle(l, m);
    return report;
}

} // namespace grex
