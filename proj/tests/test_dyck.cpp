#include "doctest.h"

#include <set>
#include <stdexcept>

#include "catwalk/bc_table.hpp"
#include "catwalk/dyck.hpp"
#include "catwalk/oracle.hpp"
#include "catwalk/walker.hpp"

using namespace catwalk;

TEST_CASE("decode reference examples") {
    CHECK(decode_dyck(1, parse_path("L")).strokes == "UD");
    CHECK(decode_dyck(2, parse_path("LL")).strokes == "UDUD");
    CHECK(decode_dyck(2, parse_path("RLL")).strokes == "UUDD");
    CHECK(decode_dyck(3, parse_path("RRLLL")).strokes == "UUUDDD");
    CHECK(decode_dyck(0, {}).strokes.empty());
}

TEST_CASE("the five words at n = 3, in code order") {
    BcTable t(4);
    const char* expected[] = {"UDUDUD", "UDUUDD", "UUDDUD", "UUDUDD", "UUUDDD"};
    for (int code = 0; code < 5; ++code)
        CHECK(unrank_dyck(3, code, t).strokes == expected[code]);
}

TEST_CASE("decode rejects malformed paths") {
    CHECK_THROWS_AS(decode_dyck(2, parse_path("L")), std::invalid_argument);
    CHECK_THROWS_AS(decode_dyck(2, parse_path("LLL")), std::invalid_argument);
    CHECK_THROWS_AS(decode_dyck(2, parse_path("RRLL")), std::invalid_argument);
    CHECK_THROWS_AS(decode_dyck(1, parse_path("RL")), std::invalid_argument);
}

TEST_CASE("encode reference examples") {
    CHECK(path_to_string(encode_dyck(DyckWord{"UD"})) == "L");
    CHECK(path_to_string(encode_dyck(DyckWord{"UUDD"})) == "RLL");
    CHECK(path_to_string(encode_dyck(DyckWord{"UUDDUD"})) == "RLLL");
    CHECK(encode_dyck(DyckWord{""}).empty());
}

TEST_CASE("invalid words are rejected at the first offending position") {
    CHECK_THROWS_WITH_AS(encode_dyck(DyckWord{"DU"}), doctest::Contains("position 0"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(encode_dyck(DyckWord{"UDDU"}), doctest::Contains("position 2"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(encode_dyck(DyckWord{"UUD"}), doctest::Contains("unbalanced"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(encode_dyck(DyckWord{"UXDD"}), doctest::Contains("position 1"),
                         std::invalid_argument);
}

TEST_CASE("rank encodes back to the code") {
    BcTable t(12);
    CHECK(rank_dyck(DyckWord{"UUDD"}, t).value == 1);
    CHECK(rank_dyck(DyckWord{"UUDDUD"}, t).value == 2);
    CHECK(rank_dyck(DyckWord{""}, t).value == 0);
    CHECK_THROWS_AS(rank_dyck(DyckWord{"UUD"}, t), std::invalid_argument);
}

TEST_CASE("decoded words cover the oracle set in lexicographic order") {
    BcTable t(10);
    for (int n = 0; n <= 9; ++n) {
        const auto expected = oracle::enumerate_dyck(n);
        const Natural total = t.at(n, 0);
        REQUIRE(expected.size() == static_cast<std::size_t>(total));
        DyckWord previous;
        for (Natural code = 0; code < total; ++code) {
            const DyckWord word = unrank_dyck(n, code, t);
            CHECK(word == expected[static_cast<std::size_t>(code)]);
            if (code > 0) CHECK(previous < word);  // D < U lexicographic
            CHECK(rank_dyck(word, t).value == code);
            previous = word;
        }
    }
}

TEST_CASE("every decoded word is a valid prefix-nonnegative word") {
    BcTable t(200);
    SeededBitSource src(17);
    for (int i = 0; i < 200; ++i) {
        const DyckWord word = sample_dyck(200, t, src);
        CHECK(word.strokes.size() == 400);
        CHECK_NOTHROW(require_valid_dyck(word));
        int height = 0, peak = 0;
        for (char c : word.strokes) {
            height += c == 'U' ? 1 : -1;
            peak = std::max(peak, height);
        }
        CHECK(peak <= 200);
    }
}

TEST_CASE("stroke emissions are exactly 2n and lookups at most 2n") {
    BcTable t(500);
    SeededBitSource src(29);
    for (const int n : {1, 7, 100, 500}) {
        WalkStats walk_stats;
        const Natural code = uniform_below(t.at(n, 0), src);
        const BranchPath path = unrank(t, {n, 0}, code, &walk_stats);
        DyckStats dyck_stats;
        const DyckWord word = decode_dyck(n, path, &dyck_stats);
        CHECK(dyck_stats.emissions == static_cast<std::uint64_t>(2 * n));
        CHECK(word.strokes.size() == static_cast<std::size_t>(2 * n));
        CHECK(walk_stats.table_lookups <= static_cast<std::uint64_t>(2 * n));
    }
}

TEST_CASE("conversions") {
    CHECK(dyck_to_parentheses(DyckWord{"UD"}) == "()");
    CHECK(dyck_to_parentheses(DyckWord{"UUDD"}) == "(())");
    CHECK(dyck_to_parentheses(DyckWord{"UDUD"}) == "()()");

    const auto steps = dyck_to_lattice_path(DyckWord{"UUDD"});
    REQUIRE(steps.size() == 4);
    CHECK(steps[0] == LatticeStep::Right);
    CHECK(steps[1] == LatticeStep::Right);
    CHECK(steps[2] == LatticeStep::Up);
    CHECK(steps[3] == LatticeStep::Up);

    CHECK(dyck_to_lattice_path(DyckWord{"UD"}) ==
          std::vector<LatticeStep>{LatticeStep::Right, LatticeStep::Up});
    CHECK_THROWS_AS(dyck_to_parentheses(DyckWord{"DU"}), std::invalid_argument);
}
