#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <sstream>
#include <stdexcept>

#include "catwalk/bc_table.hpp"
#include "catwalk/table_io.hpp"

using namespace catwalk;

TEST_CASE("csv layout puts empty cells past the diagonal") {
    BcTable t(2);
    std::ostringstream out;
    write_table_csv(t, out);
    CHECK(out.str() == "1,,\n1,0,\n2,1,0\n");
}

TEST_CASE("csv round trip preserves every cell") {
    BcTable t(40);
    std::stringstream buffer;
    write_table_csv(t, buffer);
    const BcTable reloaded = read_table_csv(buffer);
    REQUIRE(reloaded.n_max() == t.n_max());
    CHECK(reloaded == t);
    CHECK(reloaded.verify_recursion());
}

TEST_CASE("json round trip preserves every cell") {
    BcTable t(40);
    std::stringstream buffer;
    write_table_json(t, buffer);
    const BcTable reloaded = read_table_json(buffer);
    CHECK(reloaded == t);
}

TEST_CASE("json cells are decimal strings") {
    BcTable t(1);
    std::ostringstream out;
    write_table_json(t, out);
    CHECK(out.str() == "[[\"1\"],[\"1\",\"0\"]]\n");
}

TEST_CASE("malformed inputs are rejected") {
    std::stringstream missing("1,,\n1\n");
    CHECK_THROWS_AS(read_table_csv(missing), std::invalid_argument);
    std::stringstream stray("1,5\n");
    CHECK_THROWS_AS(read_table_csv(stray), std::invalid_argument);
    std::stringstream garbage("x\n");
    CHECK_THROWS_AS(read_table_csv(garbage), std::invalid_argument);
    std::stringstream numbers("[[1]]");
    CHECK_THROWS_AS(read_table_json(numbers), std::invalid_argument);
    std::stringstream object("{\"rows\":[]}");
    CHECK_THROWS_AS(read_table_json(object), std::invalid_argument);
}

TEST_CASE("save and load dispatch on the suffix") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto csv_path = (dir / "catwalk_io_test.csv").string();
    const auto json_path = (dir / "catwalk_io_test.json").string();

    BcTable t(12);
    save_table(t, csv_path);
    save_table(t, json_path);
    CHECK(load_table(csv_path) == t);
    CHECK(load_table(json_path) == t);
    std::remove(csv_path.c_str());
    std::remove(json_path.c_str());

    CHECK_THROWS_AS(save_table(t, "/no/such/dir/table.csv"), std::runtime_error);
    CHECK_THROWS_AS(save_table(t, (dir / "x.txt").string()), std::invalid_argument);
    CHECK_THROWS_AS(load_table((dir / "missing.csv").string()), std::runtime_error);
}
