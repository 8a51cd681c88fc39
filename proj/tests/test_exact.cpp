#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "grex/exact.hpp"

using grex::BigInt;
using grex::BigRational;
using grex::IntMatrix;
using grex::RationalMatrix;

namespace {

// Laplace expansion along the first row; exponential but independent of the
// elimination code it checks.
BigRational det_oracle(const RationalMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    BigRational sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        RationalMatrix sub(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(r - 1, cc++) = m.at(r, c);
            }
        }
        const BigRational term = m.at(0, j) * det_oracle(sub);
        sum += (j % 2 == 0) ? term : -term;
    }
    return sum;
}

RationalMatrix random_rational_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            const int num = static_cast<int>(rng() % 19) - 9;
            const int den = 1 + static_cast<int>(rng() % 9);
            m.at(i, j) = BigRational(num, den);
        }
    }
    return m;
}

} // namespace

TEST_CASE("integer rank") {
    IntMatrix m(3, 3);
    // rows: (1,2,3), (2,4,6), (0,1,1) -> rank 2
    const int data[3][3] = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = data[i][j];
    CHECK(grex::rank(m) == 2);

    IntMatrix id(4, 4);
    for (std::size_t i = 0; i < 4; ++i) id.at(i, i) = 1;
    CHECK(grex::rank(id) == 4);

    CHECK(grex::rank(IntMatrix(0, 5)) == 0);
    CHECK(grex::rank(IntMatrix(5, 0)) == 0);
    CHECK(grex::rank(IntMatrix(3, 3)) == 0);
}

TEST_CASE("integer determinant") {
    IntMatrix m(2, 2);
    m.at(0, 0) = 3;
    m.at(0, 1) = 7;
    m.at(1, 0) = 1;
    m.at(1, 1) = 5;
    CHECK(grex::determinant(m) == 8);

    // row swap flips the sign
    IntMatrix swapped(2, 2);
    swapped.at(0, 0) = 1;
    swapped.at(0, 1) = 5;
    swapped.at(1, 0) = 3;
    swapped.at(1, 1) = 7;
    CHECK(grex::determinant(swapped) == -8);

    // needs pivoting: zero in the corner
    IntMatrix pivot(2, 2);
    pivot.at(0, 1) = 1;
    pivot.at(1, 0) = 1;
    CHECK(grex::determinant(pivot) == -1);

    CHECK_THROWS_AS(grex::determinant(IntMatrix(2, 3)), grex::error);
}

TEST_CASE("rational determinant equals the Laplace oracle") {
    std::mt19937 rng(987654);
    for (std::size_t n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 30; ++trial) {
            const RationalMatrix m = random_rational_matrix(rng, n, n);
            CHECK(grex::determinant(m) == det_oracle(m));
        }
    }
}

TEST_CASE("rank agrees with determinantal characterization on random 3x3") {
    std::mt19937 rng(24680);
    for (int trial = 0; trial < 50; ++trial) {
        IntMatrix m(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                m.at(i, j) = static_cast<int>(rng() % 5) - 2;
        const bool full_rank = grex::rank(m) == 3;
        CHECK(full_rank == (grex::determinant(m) != 0));
    }
}

TEST_CASE("multiply") {
    IntMatrix a(2, 3), b(3, 2);
    int v = 1;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j) a.at(i, j) = v++;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 2; ++j) b.at(i, j) = v++;
    const IntMatrix c = grex::multiply(a, b);
    // a = [1 2 3; 4 5 6], b = [7 8; 9 10; 11 12]
    CHECK(c.at(0, 0) == 58);
    CHECK(c.at(0, 1) == 64);
    CHECK(c.at(1, 0) == 139);
    CHECK(c.at(1, 1) == 154);
    CHECK_THROWS_AS(grex::multiply(a, a), grex::error);
    CHECK(IntMatrix(3, 4).is_zero());
    CHECK_FALSE(c.is_zero());
    CHECK(grex::multiply(IntMatrix(0, 3), IntMatrix(3, 2)).is_zero());
}
