#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "catwalk/bc_table.hpp"
#include "catwalk/closed_forms.hpp"

using catwalk::BcTable;
using catwalk::Natural;

namespace {

// First nine rows of the count table, frozen reference values.
const std::vector<std::vector<long>> kGoldenRows = {
    {1},
    {1, 0},
    {2, 1, 0},
    {5, 3, 1, 0},
    {14, 9, 4, 1, 0},
    {42, 28, 14, 5, 1, 0},
    {132, 90, 48, 20, 6, 1, 0},
    {429, 297, 165, 75, 27, 7, 1, 0},
    {1430, 1001, 572, 275, 110, 35, 8, 1, 0},
};

}  // namespace

TEST_CASE("table of size zero holds the single base cell") {
    BcTable t(0);
    CHECK(t.n_max() == 0);
    CHECK(t.at(0, 0) == 1);
}

TEST_CASE("first nine rows match the reference table") {
    BcTable t(8);
    for (int n = 0; n <= 8; ++n)
        for (int m = 0; m <= n; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            CHECK(t.at(n, m) == kGoldenRows[n][m]);
        }
}

TEST_CASE("lookup examples") {
    BcTable t(8);
    CHECK(t.at(8, 3) == 275);
    CHECK(t.at(5, 5) == 0);
    CHECK(t.at(5, 1) == 28);
}

TEST_CASE("lookup rejects out-of-range indices") {
    BcTable t(5);
    CHECK_THROWS_AS(t.at(6, 0), std::out_of_range);
    CHECK_THROWS_AS(t.at(3, 4), std::out_of_range);
    CHECK_THROWS_AS(t.at(-1, 0), std::out_of_range);
    CHECK_THROWS_AS(t.at(2, -1), std::out_of_range);
}

TEST_CASE("recursion identities hold on the stored cells") {
    BcTable t(64);
    CHECK(t.verify_recursion());
}

TEST_CASE("rows are strictly decreasing left to right") {
    BcTable t(40);
    for (int n = 1; n <= 40; ++n)
        for (int m = 0; m < n; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            CHECK(t.at(n, m) > t.at(n, m + 1));
        }
}

TEST_CASE("diagonal neighbors") {
    BcTable t(30);
    for (int n = 1; n <= 30; ++n) {
        CHECK(t.at(n, n) == 0);
        CHECK(t.at(n, n - 1) == 1);
    }
}

TEST_CASE("column zero agrees with the Catalan closed form") {
    BcTable t(64);
    for (int n = 0; n <= 64; ++n) CHECK(t.at(n, 0) == catwalk::catalan(n));
}

TEST_CASE("cells agree with the ballot closed form") {
    // The lone exception is the corner (0, 0): the anchor a[0][0] = 1 maps
    // to N(0, -1), which is defined as 0. Equivalence holds from n = 1 on.
    CHECK(catwalk::ballot(0, -1) == 0);
    BcTable t(48);
    CHECK(t.at(0, 0) == 1);
    for (int n = 1; n <= 48; ++n)
        for (int m = 0; m <= n; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            CHECK(t.at(n, m) == catwalk::ballot(n, n - 1 - m));
        }
}

TEST_CASE("row cap refuses oversized tables") {
    CHECK_THROWS_AS(BcTable(2001), std::length_error);
    CHECK_NOTHROW(BcTable(64, 64));
    CHECK_THROWS_AS(BcTable(65, 64), std::length_error);
    CHECK_THROWS_AS(BcTable(-1), std::invalid_argument);
}

TEST_CASE("construction from rows validates shape and anchors") {
    using Rows = std::vector<std::vector<Natural>>;
    CHECK_NOTHROW(BcTable(Rows{{1}, {1, 0}, {2, 1, 0}}));
    CHECK_THROWS_AS(BcTable(Rows{}), std::invalid_argument);
    CHECK_THROWS_AS(BcTable(Rows{{2}}), std::invalid_argument);           // a[0][0] != 1
    CHECK_THROWS_AS(BcTable(Rows{{1}, {1, 5}}), std::invalid_argument);   // a[1][1] != 0
    CHECK_THROWS_AS(BcTable(Rows{{1}, {1, 0, 0}}), std::invalid_argument);  // ragged

    BcTable corrupt(Rows{{1}, {1, 0}, {3, 1, 0}});  // wrong a[2][0]
    CHECK_FALSE(corrupt.verify_recursion());
}
