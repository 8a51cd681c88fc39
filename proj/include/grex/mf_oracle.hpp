#pragma once

#include <string>
#include <vector>

#include "grex/exact.hpp"
#include "grex/ideals.hpp"

namespace grex {

/// c * x^a y^b. The zero monomial is represented by coeff == 0 (the
/// normal form of anything with x-exponent >= k, since x^k = 0 in R).
struct Monomial {
    BigRational coeff;
    Int x_exp = 0;
    Int y_exp = 0;

    bool is_zero() const { return coeff == 0; }
    bool operator==(const Monomial& other) const = default;

    std::string to_string() const;
};

/// The pair (M, N) of k x k monomial matrices with M*N = N*M = x^k * Id
/// over C[x,y], presenting the ideal I as a 2-periodic module:
///   M is upper triangular with M[p][q] = x^{k-1-(q-p)} y^{i_{q-1}-i_{p-1}},
///   N is upper bidiagonal with N[p][p] = x, N[p][p+1] = -y^{i_p-i_{p-1}}.
/// Entries are stored row-major; rows/columns are 1-based in at().
struct MatrixFactorization {
    int k = 0;
    std::vector<Monomial> M; // k*k
    std::vector<Monomial> N; // k*k

    const Monomial& m_at(int p, int q) const {
        return M[static_cast<std::size_t>((p - 1) * k + (q - 1))];
    }
    const Monomial& n_at(int p, int q) const {
        return N[static_cast<std::size_t>((p - 1) * k + (q - 1))];
    }
};

MatrixFactorization matrix_factorization(const GradedIdeal& ideal);

/// Symbolic check of M*N == N*M == x^k * Id over the ambient polynomial
/// ring (no x^k = 0 reduction).
bool verify_factorization(const MatrixFactorization& mf);

/// Monomial basis of the degree-zero part of J(n): the monomials
/// x^{k-q} y^{k-q-n-j_k} for q = 1..k that have nonnegative y-exponent and
/// lie in J, ordered by decreasing x-exponent. Coefficients are 1.
std::vector<Monomial> graded_piece_basis(const GradedIdeal& J, Int n);

/// A basis vector of a degree-zero graded piece: the monomial x^a y^b
/// sitting in component `component` (1-based) of a direct sum of shifted
/// copies of J.
struct LabeledMonomial {
    int component = 0;
    Int x_exp = 0;
    Int y_exp = 0;

    bool operator==(const LabeledMonomial& other) const = default;
};

/// An exact matrix realizing a graded map on degree-zero parts, with the
/// labeled monomial bases it is written in. matrix has one row per codomain
/// basis vector and one column per domain basis vector; entries here are
/// always in {-1, 0, 1}.
struct GradedMap {
    std::vector<LabeledMonomial> domain;
    std::vector<LabeledMonomial> codomain;
    IntMatrix matrix;

    std::string debug_dump() const;
};

struct ComplexPair {
    GradedMap nt; // N^T on degree-zero parts: bold-J -> bold-J(1)
    GradedMap mt; // M^T on degree-zero parts: bold-J(1) -> bold-J(k)
};

/// Builds the degree-zero complex bold-J -> bold-J(1) -> bold-J(k) for
/// I = I(l), J = I(m), after shifting both subsets so that I has shift 0.
ComplexPair build_complex(const KSubset& l, const KSubset& m);

/// dim ker(mt) - rank(nt), by exact rank computation. Checks mt∘nt == 0
/// first and throws not_a_complex otherwise. Uses no staircase-grid data.
Int ext_dimension_oracle(const KSubset& l, const KSubset& m);

} // namespace grex
