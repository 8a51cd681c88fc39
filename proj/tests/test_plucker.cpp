#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "grex/ext.hpp"
#include "grex/plucker.hpp"

using grex::BigRational;
using grex::Int;
using grex::KSubset;
using grex::RationalMatrix;

namespace {

RationalMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
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

std::vector<Int> window_labels(Int lo, Int hi) {
    std::vector<Int> out;
    for (Int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

} // namespace

TEST_CASE("plucker_relation expands the three-term k=2 relation") {
    const auto rel = grex::plucker_relation({1}, {2, 3, 4});
    CHECK(rel.k == 2);
    REQUIRE(rel.terms.size() == 3);
    CHECK(rel.terms[0].sign == 1);
    CHECK(rel.terms[0].first == std::vector<Int>{1, 2});
    CHECK(rel.terms[0].second == std::vector<Int>{3, 4});
    CHECK(rel.terms[1].sign == -1);
    CHECK(rel.terms[1].first == std::vector<Int>{1, 3});
    CHECK(rel.terms[1].second == std::vector<Int>{2, 4});
    CHECK(rel.terms[2].sign == 1);
    CHECK(rel.terms[2].first == std::vector<Int>{1, 4});
    CHECK(rel.terms[2].second == std::vector<Int>{2, 3});
}

TEST_CASE("plucker_relation flags degenerate terms") {
    const auto rel = grex::plucker_relation({2}, {2, 3, 4});
    REQUIRE(rel.terms.size() == 3);
    CHECK(rel.terms[0].degenerate());
    CHECK(rel.terms[0].first == std::vector<Int>{2, 2}); // repeated index
    CHECK(rel.terms[1].sign == -1);
    CHECK(rel.terms[2].sign == 1);
    // the two surviving terms cancel on any matrix
    std::mt19937 rng(7);
    const RationalMatrix m = random_matrix(rng, 2, 4);
    CHECK(grex::verify_relation(m, window_labels(1, 4), rel));
}

TEST_CASE("plucker_relation k=3 and validation errors") {
    const auto rel = grex::plucker_relation({1, 2}, {3, 4, 5, 6});
    CHECK(rel.k == 3);
    CHECK(rel.terms.size() == 4);
    int nondegenerate = 0;
    for (const auto& t : rel.terms) nondegenerate += t.degenerate() ? 0 : 1;
    CHECK(nondegenerate == 4);
    CHECK_THROWS_AS(grex::plucker_relation({1, 2}, {3, 4, 5}), grex::error);
    CHECK_THROWS_AS(grex::plucker_relation({1, 1}, {3, 4, 5, 6}), grex::error);
    CHECK_THROWS_AS(grex::plucker_relation({}, {3, 4}), grex::error);
}

TEST_CASE("evaluate_plucker") {
    // identity-like columns: unit minor
    RationalMatrix id(2, 4);
    id.at(0, 1) = 1; // column labeled 2 = e1
    id.at(1, 2) = 1; // column labeled 3 = e2
    CHECK(grex::evaluate_plucker(id, window_labels(1, 4), KSubset({2, 3})) == 1);

    // duplicated columns: singular minor
    RationalMatrix dup(2, 3);
    for (std::size_t i = 0; i < 2; ++i) {
        dup.at(i, 0) = BigRational(static_cast<int>(i) + 1);
        dup.at(i, 2) = dup.at(i, 0);
        dup.at(i, 1) = BigRational(5 - static_cast<int>(i));
    }
    CHECK(grex::evaluate_plucker(dup, window_labels(1, 3), KSubset({1, 3})) == 0);

    // random 2x4: equals ad - bc of the selected columns
    std::mt19937 rng(99);
    const RationalMatrix m = random_matrix(rng, 2, 4);
    const BigRational expected = m.at(0, 0) * m.at(1, 2) - m.at(0, 2) * m.at(1, 0);
    CHECK(grex::evaluate_plucker(m, window_labels(1, 4), KSubset({1, 3})) == expected);

    CHECK_THROWS_AS(grex::evaluate_plucker(m, window_labels(1, 4), KSubset({1, 9})),
                    grex::error);
    try {
        grex::evaluate_plucker(m, window_labels(1, 4), KSubset({1, 9}));
    } catch (const grex::error& e) {
        CHECK(e.code() == grex::errc::column_missing);
    }
}

TEST_CASE("relations vanish on random matrices; corrupted signs do not") {
    std::mt19937 rng(123456);
    for (int trial = 0; trial < 20; ++trial) {
        const RationalMatrix m2 = random_matrix(rng, 2, 5);
        for (Int a = 1; a <= 5; ++a) {
            // all (J', J) with J' = {a}, J = three others
            for (const KSubset& j_big : grex::enumerate_window(3, 1, 5)) {
                grex::PluckerRelation rel =
                    grex::plucker_relation({a}, j_big.elements());
                CHECK(grex::verify_relation(m2, window_labels(1, 5), rel));
            }
        }
    }
    for (int trial = 0; trial < 10; ++trial) {
        const RationalMatrix m3 = random_matrix(rng, 3, 6);
        for (const KSubset& j_prime : grex::enumerate_window(2, 1, 6)) {
            for (const KSubset& j_big : grex::enumerate_window(4, 1, 6)) {
                grex::PluckerRelation rel =
                    grex::plucker_relation(j_prime.elements(), j_big.elements());
                CHECK(grex::verify_relation(m3, window_labels(1, 6), rel));
            }
        }
    }
    // corrupting one sign breaks the identity on a generic matrix
    auto rel = grex::plucker_relation({1}, {2, 3, 4});
    rel.terms[1].sign = 1;
    int broken = 0;
    for (int trial = 0; trial < 5; ++trial) {
        const RationalMatrix m = random_matrix(rng, 2, 4);
        broken += grex::verify_relation(m, window_labels(1, 4), rel) ? 0 : 1;
    }
    CHECK(broken >= 4); // generically nonvanishing
}

TEST_CASE("maximal_noncrossing: triangulation counts") {
    const auto tiny = grex::maximal_noncrossing(2, 1, 3);
    REQUIRE(tiny.size() == 1);
    CHECK(tiny[0].size() == 3); // all three 2-subsets are pairwise noncrossing

    const auto square = grex::maximal_noncrossing(2, 1, 4);
    CHECK(square.size() == 2);
    for (const auto& c : square) CHECK(c.size() == 5);

    const auto pentagon = grex::maximal_noncrossing(2, 1, 5);
    CHECK(pentagon.size() == 5);
    for (const auto& c : pentagon) CHECK(c.size() == 7);

    // deterministic ordering: collections sorted, members sorted
    for (std::size_t i = 1; i < pentagon.size(); ++i) CHECK(pentagon[i - 1] < pentagon[i]);
    for (const auto& c : pentagon) {
        for (std::size_t i = 1; i < c.size(); ++i) CHECK(c[i - 1] < c[i]);
    }
}

TEST_CASE("maximal_noncrossing members are pairwise compatible") {
    for (const auto& collection : grex::maximal_noncrossing(2, 1, 6)) {
        for (const KSubset& a : collection) {
            for (const KSubset& b : collection) {
                CHECK(grex::compatible(a, b));
            }
        }
    }
    for (const auto& collection : grex::maximal_noncrossing(3, 1, 6)) {
        for (const KSubset& a : collection) {
            for (const KSubset& b : collection) {
                CHECK(grex::compatible(a, b));
            }
        }
    }
}

TEST_CASE("maximal_noncrossing window guards") {
    CHECK_THROWS_AS(grex::maximal_noncrossing(3, 0, 1), grex::error);
    CHECK_THROWS_AS(grex::maximal_noncrossing(2, 1, 40), grex::error);
    try {
        grex::maximal_noncrossing(2, 1, 40);
    } catch (const grex::error& e) {
        CHECK(e.code() == grex::errc::window_too_large);
    }
    // the cap is adjustable in both directions
    CHECK_THROWS_AS(grex::maximal_noncrossing(2, 1, 4, 5), grex::error); // C(4,2)=6 > 5
    CHECK(grex::maximal_noncrossing(2, 1, 4, 6).size() == 2);
}
