#include "grex/exact.hpp"

#include <utility>

namespace grex {

namespace {

// Bareiss fraction-free elimination, in place. Returns the number of pivots
// and, through `det_sign`, the sign flip accumulated by row swaps. After the
// run, m.at(r-1, pivot_col(r-1)) holds the r-th leading principal minor (up
// to the recorded sign) when the matrix is square and nonsingular.
std::size_t eliminate(IntMatrix& m, int& det_sign) {
    const std::size_t rows = m.rows(), cols = m.cols();
    det_sign = 1;
    BigInt prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m.at(pivot, col) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
            det_sign = -det_sign;
        }
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                m.at(i, j) = (m.at(i, j) * m.at(rank, col) - m.at(i, col) * m.at(rank, j)) / prev;
            }
            m.at(i, col) = 0;
        }
        prev = m.at(rank, col);
        ++rank;
    }
    return rank;
}

} // namespace

std::size_t rank(IntMatrix m) {
    int sign = 0;
    return eliminate(m, sign);
}

BigInt determinant(IntMatrix m) {
    if (m.rows() != m.cols()) fail(errc::bad_cardinality, "determinant of non-square matrix");
    if (m.rows() == 0) return 1;
    int sign = 0;
    const std::size_t r = eliminate(m, sign);
    if (r < m.rows()) return 0;
    BigInt d = m.at(m.rows() - 1, m.cols() - 1);
    return sign < 0 ? BigInt(-d) : d;
}

BigRational determinant(const RationalMatrix& m) {
    if (m.rows() != m.cols()) fail(errc::bad_cardinality, "determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix scaled(n, n);
    BigInt scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt row_lcm = 1;
        for (std::size_t j = 0; j < n; ++j) {
            const BigInt den = boost::multiprecision::denominator(m.at(i, j));
            row_lcm = boost::multiprecision::lcm(row_lcm, den);
        }
        for (std::size_t j = 0; j < n; ++j) {
            const BigRational v = m.at(i, j) * BigRational(row_lcm);
            scaled.at(i, j) = boost::multiprecision::numerator(v);
        }
        scale *= row_lcm;
    }
    return BigRational(determinant(std::move(scaled)), scale);
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) fail(errc::bad_cardinality, "matrix product shape mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t t = 0; t < a.cols(); ++t) {
            const BigInt& av = a.at(i, t);
            if (av == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out.at(i, j) += av * b.at(t, j);
            }
        }
    }
    return out;
}

} // namespace grex
