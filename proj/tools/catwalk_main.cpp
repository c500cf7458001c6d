// catwalk: exact uniform sampling, optimal-length coding and counting for
// Catalan structures (convex polygon triangulations and Dyck words /
// mountain ranges), driven by one precomputed count table.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "catwalk/bc_table.hpp"
#include "catwalk/bit_source.hpp"
#include "catwalk/closed_forms.hpp"
#include "catwalk/dyck.hpp"
#include "catwalk/gf_series.hpp"
#include "catwalk/integers.hpp"
#include "catwalk/oracle.hpp"
#include "catwalk/table_io.hpp"
#include "catwalk/triangulation.hpp"
#include "catwalk/walker.hpp"

namespace {

using namespace catwalk;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvariant = 2;

// Builds the table, or loads/fills a cache. An explicit --table path wins;
// otherwise CATWALK_CACHE_DIR, when set, holds one file per size.
BcTable resolve_table(int n_needed, const std::string& table_path, int row_cap) {
    std::string path = table_path;
    if (path.empty()) {
        if (const char* dir = std::getenv("CATWALK_CACHE_DIR")) {
            path = (std::filesystem::path(dir) /
                    ("bc-table-" + std::to_string(n_needed) + ".json"))
                       .string();
        }
    }
    if (!path.empty() && std::filesystem::exists(path)) {
        BcTable cached = load_table(path);
        if (cached.n_max() >= n_needed) return cached;
        std::cerr << "note: cache " << path << " only reaches n = " << cached.n_max()
                  << ", rebuilding\n";
    }
    BcTable fresh(n_needed, row_cap);
    if (!path.empty()) {
        const auto parent = std::filesystem::path(path).parent_path();
        if (!parent.empty()) std::filesystem::create_directories(parent);
        save_table(fresh, path);
    }
    return fresh;
}

std::unique_ptr<BitSource> make_source(std::uint64_t seed, const std::string& bits_hex) {
    if (!bits_hex.empty())
        return std::make_unique<ReplayBitSource>(ReplayBitSource::from_hex(bits_hex));
    return std::make_unique<SeededBitSource>(seed);
}

std::string read_stdin() {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::string dyck_text(const DyckWord& word, const std::string& format) {
    if (format == "parens") return dyck_to_parentheses(word);
    if (format == "steps") {
        nlohmann::json steps = nlohmann::json::array();
        for (const LatticeStep s : dyck_to_lattice_path(word))
            steps.push_back(s == LatticeStep::Right ? "RIGHT" : "UP");
        return steps.dump();
    }
    return word.strokes;
}

void check_vertices(int vertices) {
    if (vertices < 3)
        throw std::invalid_argument("a polygon context needs --vertices >= 3");
}

// ---- subcommands -------------------------------------------------------

struct TableArgs {
    int n = 0;
    std::string format = "csv";
    std::string out_path;
    int row_cap = BcTable::kDefaultRowCap;
};

int run_table(const TableArgs& args) {
    BcTable table(args.n, args.row_cap);
    const auto write = [&](std::ostream& out) {
        if (args.format == "csv") write_table_csv(table, out);
        else write_table_json(table, out);
    };
    if (args.out_path.empty()) {
        write(std::cout);
    } else {
        std::ofstream out(args.out_path);
        if (!out) throw std::runtime_error("cannot open " + args.out_path);
        write(out);
    }
    return kExitOk;
}

struct CountArgs {
    bool triangulations = false;
    int vertices = 0;
    int missing = 0;
    int n = 0;
    std::string table_path;
    int row_cap = BcTable::kDefaultRowCap;
};

int run_count(const CountArgs& args) {
    if (args.triangulations) {
        check_vertices(args.vertices);
        const BcTable table =
            resolve_table(args.vertices - 2, args.table_path, args.row_cap);
        std::cout << count_triangulations(args.vertices, args.missing, table).str()
                  << '\n';
    } else {
        if (args.n < 0) throw std::invalid_argument("--n must be >= 0");
        const BcTable table = resolve_table(args.n, args.table_path, args.row_cap);
        std::cout << table.at(args.n, 0).str() << '\n';
    }
    return kExitOk;
}

struct SampleArgs {
    bool triangulations = false;
    int vertices = 0;
    int missing = 0;
    int n = 0;
    int count = 1;
    std::uint64_t seed = 0;
    std::string bits_hex;
    bool stats = false;
    std::string format = "ud";
    std::string table_path;
    int row_cap = BcTable::kDefaultRowCap;
};

int run_sample(const SampleArgs& args) {
    if (args.count < 1) throw std::invalid_argument("--count must be >= 1");
    if (args.triangulations) check_vertices(args.vertices);
    else if (args.n < 0) throw std::invalid_argument("--n must be >= 0");

    const int root_n = args.triangulations ? args.vertices - 2 : args.n;
    const int root_m = args.triangulations ? args.missing : 0;
    const BcTable table = resolve_table(root_n, args.table_path, args.row_cap);
    if (args.triangulations &&
        count_triangulations(args.vertices, args.missing, table) == 0)
        throw std::domain_error("empty structure class (N = " +
                                std::to_string(args.vertices) + ", missing = " +
                                std::to_string(args.missing) + ")");

    auto source = make_source(args.seed, args.bits_hex);
    for (int i = 0; i < args.count; ++i) {
        const auto before = source->bits_consumed();
        const SampleResult sample = sample_path(table, {root_n, root_m}, *source);
        const auto bits_spent = source->bits_consumed() - before;

        nlohmann::ordered_json line;
        if (args.triangulations) {
            const Triangulation tri =
                decode_triangulation(args.vertices, args.missing, sample.path);
            line = nlohmann::ordered_json::parse(triangulation_to_json(tri, args.missing));
        } else {
            const DyckWord word = decode_dyck(args.n, sample.path);
            if (!args.stats) {
                std::cout << dyck_text(word, args.format) << '\n';
                continue;
            }
            line["word"] = word.strokes;
        }
        if (args.stats) {
            line["code"] = sample.code.value.str();
            line["bits_consumed"] = bits_spent;
            line["path_length"] = sample.path.size();
        }
        std::cout << line.dump() << '\n';
    }
    return kExitOk;
}

struct RankArgs {
    bool triangulations = false;
    std::string json_text;
    std::string word;
    bool emit_bits = false;
    std::string table_path;
    int row_cap = BcTable::kDefaultRowCap;
};

int run_rank(const RankArgs& args) {
    Code code{0, {0, 0}};
    BcTable table(0);
    if (args.triangulations) {
        const std::string text = args.json_text.empty() ? read_stdin() : args.json_text;
        const auto [tri, missing] = triangulation_from_json(text);
        check_vertices(tri.n_vertices);
        table = resolve_table(tri.n_vertices - 2, args.table_path, args.row_cap);
        code = rank_triangulation(tri.n_vertices, missing, tri, table);
    } else {
        const std::string text = trim(args.word.empty() ? read_stdin() : args.word);
        const DyckWord word{text};
        if (word.strokes.size() % 2 != 0)
            throw std::invalid_argument("a Dyck word has an even number of strokes");
        table = resolve_table(word.half_length(), args.table_path, args.row_cap);
        code = rank_dyck(word, table);
    }
    if (args.emit_bits) std::cout << code_to_bits(code, table) << '\n';
    else std::cout << code.value.str() << '\n';
    return kExitOk;
}

struct UnrankArgs {
    bool triangulations = false;
    int vertices = 0;
    int missing = 0;
    int n = 0;
    std::string code_text;
    std::string code_bits;
    std::string format = "ud";
    std::string table_path;
    int row_cap = BcTable::kDefaultRowCap;
};

int run_unrank(const UnrankArgs& args) {
    if (args.triangulations) check_vertices(args.vertices);
    else if (args.n < 0) throw std::invalid_argument("--n must be >= 0");
    if (!args.code_text.empty() && !args.code_bits.empty())
        throw std::invalid_argument("provide --code or --code-bits, not both");
    if (args.code_text.empty() && args.code_bits.empty())
        throw std::invalid_argument("provide --code or --code-bits");

    const int root_n = args.triangulations ? args.vertices - 2 : args.n;
    const int root_m = args.triangulations ? args.missing : 0;
    const BcTable table = resolve_table(root_n, args.table_path, args.row_cap);

    const Natural code = args.code_bits.empty()
                             ? parse_natural(args.code_text)
                             : bits_to_code(args.code_bits, {root_n, root_m}, table).value;

    if (args.triangulations) {
        const Triangulation tri =
            unrank_triangulation(args.vertices, args.missing, code, table);
        std::cout << triangulation_to_json(tri, args.missing) << '\n';
    } else {
        std::cout << dyck_text(unrank_dyck(args.n, code, table), args.format) << '\n';
    }
    return kExitOk;
}

struct EnumerateArgs {
    bool triangulations = false;
    int vertices = 0;
    int n = 0;
    int guard = 0;
};

int run_enumerate(const EnumerateArgs& args) {
    if (args.triangulations) {
        const int guard = args.guard > 0 ? args.guard : oracle::kTriangulationGuard;
        for (const auto& tri : oracle::enumerate_triangulations(args.vertices, guard))
            std::cout << triangulation_to_json(tri, 0) << '\n';
    } else {
        const int guard = args.guard > 0 ? args.guard : oracle::kDyckGuard;
        for (const auto& word : oracle::enumerate_dyck(args.n, guard)) {
            nlohmann::ordered_json line;
            line["word"] = word.strokes;
            std::cout << line.dump() << '\n';
        }
    }
    return kExitOk;
}

int run_verify_gf(int degree) {
    const BcTable table(degree, std::max(degree, BcTable::kDefaultRowCap));
    const GfReport report = verify_generating_function(table, degree);
    if (report.ok()) {
        std::cout << "ok: generating function matches all " << (degree + 1) << "x"
                  << (degree + 1) << " coefficients\n";
        return kExitOk;
    }
    for (const auto& miss : report.mismatches)
        std::cout << "mismatch at x^" << miss.i << " y^" << miss.j << ": series "
                  << miss.series_value.str() << " vs table " << miss.table_value.str()
                  << '\n';
    return kExitInvariant;
}

struct SelftestArgs {
    int n_max = 64;
    int gf_degree = 8;
};

int run_selftest(const SelftestArgs& args) {
    if (args.n_max < 0) throw std::invalid_argument("--nmax must be >= 0");
    int failures = 0;
    const auto report = [&](bool ok, const std::string& what) {
        std::cout << (ok ? "ok: " : "FAIL: ") << what << '\n';
        if (!ok) ++failures;
    };

    const BcTable table(args.n_max, std::max(args.n_max, BcTable::kDefaultRowCap));
    report(table.verify_recursion(), "recursion identities on all cells");

    bool closed_forms = table.at(0, 0) == 1 && ballot(0, -1) == 0;
    for (int n = 0; n <= args.n_max && closed_forms; ++n) {
        if (table.at(n, 0) != catalan(n)) closed_forms = false;
        if (n == 0) continue;  // a[0][0] maps to the defined zero N(0, -1)
        for (int m = 0; m <= n; ++m)
            if (table.at(n, m) != ballot(n, n - 1 - m)) {
                closed_forms = false;
                break;
            }
    }
    report(closed_forms, "closed forms (catalan, ballot) match every cell");

    bool monotone = true;
    for (int n = 1; n <= args.n_max && monotone; ++n)
        for (int m = 0; m < n; ++m)
            if (!(table.at(n, m) > table.at(n, m + 1))) {
                monotone = false;
                break;
            }
    report(monotone, "rows strictly decrease");

    const int degree = std::min(args.gf_degree, args.n_max);
    report(verify_generating_function(table, degree).ok(),
           "generating function matches to degree " + std::to_string(degree));

    bool bijection = true;
    const int bijection_cap = std::min(args.n_max, 9);
    for (int n = 0; n <= bijection_cap && bijection; ++n)
        for (int m = 0; m <= n; ++m) {
            const Natural& total = table.at(n, m);
            for (Natural code = 0; code < total; ++code)
                if (rank(table, {n, m}, unrank(table, {n, m}, code)).value != code) {
                    bijection = false;
                    break;
                }
        }
    report(bijection,
           "rank inverts unrank exhaustively up to n = " + std::to_string(bijection_cap));

    bool tri_oracle = true;
    for (int v = 3; v <= std::min(args.n_max + 2, 8); ++v) {
        const auto expected = oracle::enumerate_triangulations(v);
        std::set<Triangulation> decoded;
        const Natural total = count_triangulations(v, 0, table);
        for (Natural code = 0; code < total; ++code)
            decoded.insert(unrank_triangulation(v, 0, code, table));
        if (decoded.size() != expected.size() ||
            !std::equal(decoded.begin(), decoded.end(), expected.begin()))
            tri_oracle = false;
    }
    report(tri_oracle, "triangulation decode covers the oracle enumeration");

    bool dyck_oracle = true;
    for (int n = 0; n <= std::min(args.n_max, 8); ++n) {
        const auto expected = oracle::enumerate_dyck(n);
        const Natural total = table.at(n, 0);
        if (expected.size() != static_cast<std::size_t>(total)) {
            dyck_oracle = false;
            break;
        }
        for (Natural code = 0; code < total; ++code)
            if (!(unrank_dyck(n, code, table) == expected[static_cast<std::size_t>(code)])) {
                dyck_oracle = false;
                break;
            }
    }
    report(dyck_oracle, "dyck decode matches the oracle enumeration in order");

    if (failures > 0) {
        std::cout << failures << " check(s) failed\n";
        return kExitInvariant;
    }
    std::cout << "all checks passed\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact uniform sampling, coding and counting of Catalan structures"};
    app.require_subcommand(1);

    TableArgs table_args;
    auto* table_cmd = app.add_subcommand("table", "build the count table and export it");
    table_cmd->add_option("--n", table_args.n, "largest row to build")->required();
    table_cmd->add_option("--format", table_args.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    table_cmd->add_option("--out", table_args.out_path, "output path (default stdout)");
    table_cmd->add_option("--max-rows", table_args.row_cap, "memory cap on rows")
        ->capture_default_str();

    CountArgs count_args;
    auto* count_cmd = app.add_subcommand("count", "exact structure counts");
    count_cmd->require_subcommand(1);
    auto* count_tri =
        count_cmd->add_subcommand("triangulations", "triangulations of the convex N-gon");
    count_tri->add_option("--vertices", count_args.vertices, "polygon size N")->required();
    count_tri->add_option("--missing", count_args.missing,
                          "forbidden consecutive span-2 edges");
    auto* count_dyck = count_cmd->add_subcommand("dyck", "Dyck words of length 2n");
    count_dyck->add_option("--n", count_args.n, "half length n")->required();
    for (auto* sub : {count_tri, count_dyck}) {
        sub->add_option("--table", count_args.table_path, "table cache path");
        sub->add_option("--max-rows", count_args.row_cap, "memory cap on rows");
    }

    SampleArgs sample_args;
    sample_args.seed = std::random_device{}();  // overridden by --seed
    auto* sample_cmd = app.add_subcommand("sample", "exact uniform samples");
    sample_cmd->require_subcommand(1);
    auto* sample_tri =
        sample_cmd->add_subcommand("triangulation", "uniform triangulation of the N-gon");
    sample_tri->add_option("--vertices", sample_args.vertices, "polygon size N")->required();
    sample_tri->add_option("--missing", sample_args.missing,
                           "forbidden consecutive span-2 edges");
    auto* sample_dyck = sample_cmd->add_subcommand("dyck", "uniform Dyck word");
    sample_dyck->add_option("--n", sample_args.n, "half length n")->required();
    sample_dyck->add_option("--format", sample_args.format, "ud, parens or steps")
        ->check(CLI::IsMember({"ud", "parens", "steps"}))
        ->capture_default_str();
    for (auto* sub : {sample_tri, sample_dyck}) {
        sub->add_option("--count", sample_args.count, "number of samples");
        sub->add_option("--seed", sample_args.seed, "64-bit seed (default: random)");
        sub->add_option("--bits", sample_args.bits_hex, "hex-encoded replay bit source");
        sub->add_flag("--stats", sample_args.stats, "report code, bits and path length");
        sub->add_option("--table", sample_args.table_path, "table cache path");
        sub->add_option("--max-rows", sample_args.row_cap, "memory cap on rows");
    }

    RankArgs rank_args;
    auto* rank_cmd = app.add_subcommand("rank", "structure to optimal code");
    rank_cmd->require_subcommand(1);
    auto* rank_tri =
        rank_cmd->add_subcommand("triangulation", "rank a triangulation JSON object");
    rank_tri->add_option("--json", rank_args.json_text,
                         "triangulation JSON (default: read stdin)");
    auto* rank_dyck_cmd = rank_cmd->add_subcommand("dyck", "rank a U/D word");
    rank_dyck_cmd->add_option("--word", rank_args.word, "U/D word (default: read stdin)");
    for (auto* sub : {rank_tri, rank_dyck_cmd}) {
        sub->add_flag("--emit-bits", rank_args.emit_bits,
                      "print the fixed-width codeword bits instead of decimal");
        sub->add_option("--table", rank_args.table_path, "table cache path");
        sub->add_option("--max-rows", rank_args.row_cap, "memory cap on rows");
    }

    UnrankArgs unrank_args;
    auto* unrank_cmd = app.add_subcommand("unrank", "optimal code to structure");
    unrank_cmd->require_subcommand(1);
    auto* unrank_tri =
        unrank_cmd->add_subcommand("triangulation", "decode a triangulation from its code");
    unrank_tri->add_option("--vertices", unrank_args.vertices, "polygon size N")->required();
    unrank_tri->add_option("--missing", unrank_args.missing,
                           "forbidden consecutive span-2 edges");
    auto* unrank_dyck_cmd =
        unrank_cmd->add_subcommand("dyck", "decode a Dyck word from its code");
    unrank_dyck_cmd->add_option("--n", unrank_args.n, "half length n")->required();
    unrank_dyck_cmd->add_option("--format", unrank_args.format, "ud, parens or steps")
        ->check(CLI::IsMember({"ud", "parens", "steps"}))
        ->capture_default_str();
    for (auto* sub : {unrank_tri, unrank_dyck_cmd}) {
        sub->add_option("--code", unrank_args.code_text, "code as a decimal string");
        sub->add_option("--code-bits", unrank_args.code_bits,
                        "code as fixed-width big-endian bits");
        sub->add_option("--table", unrank_args.table_path, "table cache path");
        sub->add_option("--max-rows", unrank_args.row_cap, "memory cap on rows");
    }

    EnumerateArgs enum_args;
    auto* enum_cmd =
        app.add_subcommand("enumerate", "brute-force oracle enumeration (guarded)");
    enum_cmd->require_subcommand(1);
    auto* enum_tri = enum_cmd->add_subcommand("triangulations", "all triangulations");
    enum_tri->add_option("--vertices", enum_args.vertices, "polygon size N")->required();
    auto* enum_dyck = enum_cmd->add_subcommand("dyck", "all Dyck words");
    enum_dyck->add_option("--n", enum_args.n, "half length n")->required();
    for (auto* sub : {enum_tri, enum_dyck})
        sub->add_option("--guard", enum_args.guard, "raise the size guard");

    SelftestArgs selftest_args;
    auto* selftest_cmd = app.add_subcommand("selftest", "run the invariant suite");
    selftest_cmd->add_option("--nmax", selftest_args.n_max, "table size to check")
        ->capture_default_str();
    selftest_cmd
        ->add_option("--gf-degree", selftest_args.gf_degree, "generating-function degree")
        ->capture_default_str();

    int gf_degree = 8;
    auto* gf_cmd =
        app.add_subcommand("verify-gf", "compare the generating function with the table");
    gf_cmd->add_option("--degree", gf_degree, "truncation degree")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (table_cmd->parsed()) return run_table(table_args);
        if (count_cmd->parsed()) {
            count_args.triangulations = count_tri->parsed();
            return run_count(count_args);
        }
        if (sample_cmd->parsed()) {
            sample_args.triangulations = sample_tri->parsed();
            return run_sample(sample_args);
        }
        if (rank_cmd->parsed()) {
            rank_args.triangulations = rank_tri->parsed();
            return run_rank(rank_args);
        }
        if (unrank_cmd->parsed()) {
            unrank_args.triangulations = unrank_tri->parsed();
            return run_unrank(unrank_args);
        }
        if (enum_cmd->parsed()) {
            enum_args.triangulations = enum_tri->parsed();
            return run_enumerate(enum_args);
        }
        if (selftest_cmd->parsed()) return run_selftest(selftest_args);
        if (gf_cmd->parsed()) return run_verify_gf(gf_degree);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInvariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}
