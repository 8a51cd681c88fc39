#include "grex/mf_oracle.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace grex {

std::string Monomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    if (coeff == -1)
        out = "-";
    else if (coeff != 1)
        out = coeff.str() + "*";
    std::string vars;
    if (x_exp == 1)
        vars = "x";
    else if (x_exp > 1)
        vars = "x^" + std::to_string(x_exp);
    if (y_exp > 0) {
        if (!vars.empty()) vars += '*';
        vars += y_exp == 1 ? "y" : "y^" + std::to_string(y_exp);
    }
    if (vars.empty()) vars = "1";
    return out + vars;
}

MatrixFactorization matrix_factorization(const GradedIdeal& ideal) {
    const int k = ideal.k();
    MatrixFactorization mf;
    mf.k = k;
    mf.M.assign(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), Monomial{});
    mf.N.assign(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), Monomial{});
    for (int p = 1; p <= k; ++p) {
        for (int q = p; q <= k; ++q) {
            mf.M[static_cast<std::size_t>((p - 1) * k + (q - 1))] =
                Monomial{1, k - 1 - (q - p), ideal.exponent_at(q - 1) - ideal.exponent_at(p - 1)};
        }
        mf.N[static_cast<std::size_t>((p - 1) * k + (p - 1))] = Monomial{1, 1, 0};
        if (p < k) {
            mf.N[static_cast<std::size_t>((p - 1) * k + p)] =
                Monomial{-1, 0, ideal.exponent_at(p) - ideal.exponent_at(p - 1)};
        }
    }
    return mf;
}

namespace {

// Sparse polynomial in x, y over Q, keyed by (x_exp, y_exp). Only used for
// the symbolic factorization check, which works in the ambient ring.
using Poly = std::map<std::pair<Int, Int>, BigRational>;

void add_product(Poly& acc, const Monomial& a, const Monomial& b) {
    if (a.is_zero() || b.is_zero()) return;
    auto key = std::make_pair(a.x_exp + b.x_exp, a.y_exp + b.y_exp);
    auto [it, inserted] = acc.emplace(key, a.coeff * b.coeff);
    if (!inserted) {
        it->second += a.coeff * b.coeff;
        if (it->second == 0) acc.erase(it);
    }
}

bool product_is_xk_identity(const MatrixFactorization& mf, bool m_first) {
    const int k = mf.k;
    for (int p = 1; p <= k; ++p) {
        for (int q = 1; q <= k; ++q) {
            Poly entry;
            for (int r = 1; r <= k; ++r) {
                if (m_first)
                    add_product(entry, mf.m_at(p, r), mf.n_at(r, q));
                else
                    add_product(entry, mf.n_at(p, r), mf.m_at(r, q));
            }
            if (p == q) {
                if (entry.size() != 1) return false;
                const auto& [key, coeff] = *entry.begin();
                if (key != std::make_pair(Int(k), Int(0)) || coeff != 1) return false;
            } else if (!entry.empty()) {
                return false;
            }
        }
    }
    return true;
}

} // namespace

bool verify_factorization(const MatrixFactorization& mf) {
    return product_is_xk_identity(mf, true) && product_is_xk_identity(mf, false);
}

std::vector<Monomial> graded_piece_basis(const GradedIdeal& J, Int n) {
    const int k = J.k();
    std::vector<Monomial> basis;
    for (int q = 1; q <= k; ++q) {
        const Int x_exp = k - q;
        const Int y_exp = k - q - n - J.shift();
        if (y_exp < 0) continue;
        if (!contains_monomial(J, x_exp, y_exp)) continue;
        basis.push_back(Monomial{1, x_exp, y_exp});
    }
    return basis;
}

namespace {

struct BasisIndex {
    std::vector<LabeledMonomial> vectors;
    std::map<std::pair<int, std::pair<Int, Int>>, std::size_t> lookup;

    void add(int component, const Monomial& mono) {
        lookup.emplace(std::make_pair(component, std::make_pair(mono.x_exp, mono.y_exp)),
                       vectors.size());
        vectors.push_back(LabeledMonomial{component, mono.x_exp, mono.y_exp});
    }

    std::size_t find(int component, Int x_exp, Int y_exp) const {
        auto it = lookup.find(std::make_pair(component, std::make_pair(x_exp, y_exp)));
        if (it == lookup.end()) {
            throw std::logic_error("graded map image fell outside the codomain basis at "
                                   "component " +
                                   std::to_string(component) + ", monomial x^" +
                                   std::to_string(x_exp) + "*y^" + std::to_string(y_exp));
        }
        return it->second;
    }
};

// Degree-zero basis of bold-J shifted by `extra`: component p carries shift
// deg_I(x^{k-p} y^{i_{p-1}}) + extra = (k-p) - i_{p-1} + extra, with i_k = 0
// already arranged by the caller.
BasisIndex bold_j_basis(const GradedIdeal& I, const GradedIdeal& J, Int extra) {
    BasisIndex out;
    const int k = I.k();
    for (int p = 1; p <= k; ++p) {
        const Int n = (k - p) - I.exponent_at(p - 1) + extra;
        for (const Monomial& mono : graded_piece_basis(J, n)) out.add(p, mono);
    }
    return out;
}

} // namespace

std::string GradedMap::debug_dump() const {
    auto describe = [](const LabeledMonomial& v) {
        Monomial mono{1, v.x_exp, v.y_exp};
        return "J[" + std::to_string(v.component) + "]*" + mono.to_string();
    };
    std::string out = "domain:";
    for (const auto& v : domain) out += " " + describe(v);
    out += "\ncodomain:";
    for (const auto& v : codomain) out += " " + describe(v);
    out += "\nmatrix (rows = codomain):\n";
    for (std::size_t i = 0; i < matrix.rows(); ++i) {
        for (std::size_t j = 0; j < matrix.cols(); ++j) {
            out += (j ? " " : "") + matrix.at(i, j).str();
        }
        out += '\n';
    }
    return out;
}

ComplexPair build_complex(const KSubset& l, const KSubset& m) {
    if (l.k() != m.k()) {
        fail(errc::mismatched_k, "cardinalities differ: " + std::to_string(l.k()) + " vs " +
                                     std::to_string(m.k()));
    }
    const int k = l.k();
    // Normalize by the common shift making I's grading shift zero
    // (l_k = k-1); this changes neither Ext nor the grids.
    const Int t = k - 1 - l[k - 1];
    const GradedIdeal I = ideal_from_subset(shift(l, t));
    const GradedIdeal J = ideal_from_subset(shift(m, t));

    const BasisIndex dom = bold_j_basis(I, J, 0);
    const BasisIndex mid = bold_j_basis(I, J, 1);
    const BasisIndex cod = bold_j_basis(I, J, k);

    ComplexPair out;
    out.nt.domain = dom.vectors;
    out.nt.codomain = mid.vectors;
    out.nt.matrix = IntMatrix(mid.vectors.size(), dom.vectors.size());
    for (std::size_t col = 0; col < dom.vectors.size(); ++col) {
        const LabeledMonomial& src = dom.vectors[col];
        const int p = src.component;
        // (N^T a)_p picks up x * a_p; (N^T a)_{p+1} picks up -y^{i_p - i_{p-1}} * a_p.
        if (src.x_exp + 1 <= k - 1) {
            out.nt.matrix.at(mid.find(p, src.x_exp + 1, src.y_exp), col) += 1;
        }
        if (p < k) {
            const Int dy = I.exponent_at(p) - I.exponent_at(p - 1);
            out.nt.matrix.at(mid.find(p + 1, src.x_exp, src.y_exp + dy), col) -= 1;
        }
    }

    out.mt.domain = mid.vectors;
    out.mt.codomain = cod.vectors;
    out.mt.matrix = IntMatrix(cod.vectors.size(), mid.vectors.size());
    for (std::size_t col = 0; col < mid.vectors.size(); ++col) {
        const LabeledMonomial& src = mid.vectors[col];
        const int q = src.component;
        // (M^T b)_p = sum_{q <= p} x^{k-1-(p-q)} y^{i_{p-1}-i_{q-1}} b_q.
        for (int p = q; p <= k; ++p) {
            const Int xe = src.x_exp + (k - 1 - (p - q));
            if (xe >= k) continue; // x^k = 0
            const Int ye = src.y_exp + I.exponent_at(p - 1) - I.exponent_at(q - 1);
            out.mt.matrix.at(cod.find(p, xe, ye), col) += 1;
        }
    }
    return out;
}

Int ext_dimension_oracle(const KSubset& l, const KSubset& m) {
    const ComplexPair complex = build_complex(l, m);
    if (!multiply(complex.mt.matrix, complex.nt.matrix).is_zero()) {
        fail(errc::not_a_complex, "M^T ∘ N^T != 0 on degree-zero parts for l=" + l.to_string() +
                                      ", m=" + m.to_string());
    }
    const Int mid_dim = static_cast<Int>(complex.mt.matrix.cols());
    const Int rank_mt = static_cast<Int>(rank(complex.mt.matrix));
    const Int rank_nt = static_cast<Int>(rank(complex.nt.matrix));
    return (mid_dim - rank_mt) - rank_nt;
}

} // namespace grex
