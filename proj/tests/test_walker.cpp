#include "doctest.h"

#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "catwalk/bc_table.hpp"
#include "catwalk/bit_source.hpp"
#include "catwalk/closed_forms.hpp"
#include "catwalk/walker.hpp"

using namespace catwalk;

TEST_CASE("child transitions") {
    CHECK(left_child({3, 0}) == NodeState{2, 0});
    CHECK(right_child({3, 1}) == NodeState{3, 2});
    CHECK(left_child({2, 1}) == NodeState{1, 0});
    CHECK_THROWS_AS(left_child({0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(right_child({0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(right_child({3, 3}), std::invalid_argument);
}

TEST_CASE("unrank reference examples") {
    BcTable t(8);
    CHECK(path_to_string(unrank(t, {3, 0}, 0)) == "LLL");
    CHECK(path_to_string(unrank(t, {3, 0}, 4)) == "RRLLL");
    CHECK(path_to_string(unrank(t, {1, 0}, 0)) == "L");
}

TEST_CASE("unrank full order at the five-leaf root") {
    BcTable t(8);
    const char* expected[] = {"LLL", "LRLL", "RLLL", "RLRLL", "RRLLL"};
    for (int code = 0; code < 5; ++code)
        CHECK(path_to_string(unrank(t, {3, 0}, code)) == expected[code]);
}

TEST_CASE("unrank rejects out-of-range codes and empty classes") {
    BcTable t(8);
    CHECK_THROWS_AS(unrank(t, {3, 0}, 5), std::out_of_range);
    CHECK_THROWS_AS(unrank(t, {3, 3}, 0), std::domain_error);
    CHECK_THROWS_AS(unrank(t, {9, 0}, 0), std::invalid_argument);  // outside table
}

TEST_CASE("rank inverts the examples") {
    BcTable t(8);
    CHECK(rank(t, {3, 0}, parse_path("LLL")).value == 0);
    CHECK(rank(t, {3, 0}, parse_path("RRLLL")).value == 4);
    CHECK(rank(t, {1, 0}, parse_path("L")).value == 0);
}

TEST_CASE("rank rejects malformed paths and names the step") {
    BcTable t(8);
    // Ends before the leaf.
    CHECK_THROWS_WITH_AS(rank(t, {3, 0}, parse_path("LL")),
                         doctest::Contains("failing step index 2"),
                         std::invalid_argument);
    // Continues past the leaf.
    CHECK_THROWS_WITH_AS(rank(t, {3, 0}, parse_path("LLLL")),
                         doctest::Contains("step 3"), std::invalid_argument);
    // Enters the empty class (2, 2).
    CHECK_THROWS_WITH_AS(rank(t, {2, 1}, parse_path("RLL")),
                         doctest::Contains("step 0"), std::invalid_argument);
}

TEST_CASE("bijection is exhaustive at desk scale") {
    BcTable t(12);
    for (int n = 0; n <= 12; ++n)
        for (int m = 0; m <= n; ++m) {
            const Natural& total = t.at(n, m);
            if (total == 0 || total > 100000) continue;
            std::set<std::string> seen;
            for (Natural code = 0; code < total; ++code) {
                const BranchPath path = unrank(t, {n, m}, code);
                CHECK(rank(t, {n, m}, path).value == code);
                seen.insert(path_to_string(path));
            }
            CHECK(seen.size() == static_cast<std::size_t>(total));
        }
}

TEST_CASE("round trips hold for random codes at a large root") {
    BcTable t(60);
    const Natural total = t.at(60, 0);
    SeededBitSource src(2024);
    for (int i = 0; i < 10000; ++i) {
        const Natural code = uniform_below(total, src);
        CHECK(rank(t, {60, 0}, unrank(t, {60, 0}, code)).value == code);
    }
}

TEST_CASE("paths have n left steps and length between n and 2n") {
    BcTable t(40);
    std::mt19937 rng(99);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 40)(rng);
        const int m = std::uniform_int_distribution<int>(0, n - 1)(rng);
        SeededBitSource src(trial);
        const auto [code, path] = sample_path(t, {n, m}, src);
        int lefts = 0;
        for (Step s : path)
            if (s == Step::L) ++lefts;
        CHECK(lefts == n);
        CHECK(path.size() >= static_cast<std::size_t>(n));
        CHECK(path.size() <= static_cast<std::size_t>(2 * n));
    }
}

TEST_CASE("code bit strings") {
    BcTable t(8);
    CHECK(code_to_bits({4, {3, 0}}, t) == "100");
    CHECK(code_to_bits({0, {1, 0}}, t) == "");
    CHECK(code_to_bits({0, {8, 0}}, t).size() == 11);  // ceil(log2 1430)

    CHECK(bits_to_code("100", {3, 0}, t).value == 4);
    CHECK(bits_to_code("", {1, 0}, t).value == 0);
    CHECK_THROWS_AS(bits_to_code("1000", {3, 0}, t), std::invalid_argument);  // wrong width
    CHECK_THROWS_AS(bits_to_code("101", {3, 0}, t), std::out_of_range);       // 5 >= 5
    CHECK_THROWS_AS(bits_to_code("10z", {3, 0}, t), std::invalid_argument);
}

TEST_CASE("packed codewords round-trip") {
    BcTable t(20);
    SeededBitSource src(5);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 20)(rng);
        const Natural code = uniform_below(t.at(n, 0), src);
        const Code original{code, {n, 0}};
        const auto bytes = pack_code(original, t);
        CHECK(bytes.size() == (code_to_bits(original, t).size() + 7) / 8);
        CHECK(unpack_code(bytes, {n, 0}, t).value == code);
    }
    // Nonzero padding is rejected.
    const auto bytes = pack_code({0, {3, 0}}, t);  // 3 bits -> one byte "000xxxxx"
    auto tampered = bytes;
    tampered[0] |= 0x01;
    CHECK_THROWS_AS(unpack_code(tampered, {3, 0}, t), std::invalid_argument);
}

TEST_CASE("sample_path reference examples") {
    BcTable t(8);
    SUBCASE("leaf root needs no bits") {
        ReplayBitSource src("");
        const auto r = sample_path(t, {0, 0}, src);
        CHECK(r.code.value == 0);
        CHECK(r.path.empty());
        CHECK(src.bits_consumed() == 0);
    }
    SUBCASE("accepted first draw") {
        ReplayBitSource src("010");
        const auto r = sample_path(t, {3, 0}, src);
        CHECK(r.code.value == 2);
        CHECK(path_to_string(r.path) == "RLLL");
        CHECK(src.bits_consumed() == 3);
    }
    SUBCASE("rejected then accepted") {
        ReplayBitSource src("111001");
        const auto r = sample_path(t, {3, 0}, src);
        CHECK(r.code.value == 1);
        CHECK(path_to_string(r.path) == "LRLL");
        CHECK(src.bits_consumed() == 6);
    }
    SUBCASE("empty class is a distinct error") {
        ReplayBitSource src("0000");
        CHECK_THROWS_AS(sample_path(t, {4, 4}, src), std::domain_error);
    }
}

TEST_CASE("leaf count at (n, 0) is the Catalan number") {
    BcTable t(16);
    for (int n = 0; n <= 16; ++n) CHECK(t.at(n, 0) == catalan(n));
}

TEST_CASE("path text parsing") {
    CHECK(path_to_string(parse_path("LRLL")) == "LRLL");
    CHECK(parse_path("").empty());
    CHECK_THROWS_AS(parse_path("LRX"), std::invalid_argument);
}
