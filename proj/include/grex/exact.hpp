#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "grex/errors.hpp"

namespace grex {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Dense row-major matrix over an exact scalar type. Zero-sized dimensions
/// are allowed (empty graded pieces produce 0 x n maps).
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const {
        for (const T& v : data_) {
            if (v != 0) return false;
        }
        return true;
    }

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RationalMatrix = Matrix<BigRational>;

/// Rank over Q by fraction-free Bareiss elimination; all divisions exact.
std::size_t rank(IntMatrix m);

/// Determinant of a square integer matrix, fraction-free Bareiss.
BigInt determinant(IntMatrix m);

/// Determinant of a square rational matrix: clears denominators row by row,
/// runs the integer elimination, divides back. Exact.
BigRational determinant(const RationalMatrix& m);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

} // namespace grex
