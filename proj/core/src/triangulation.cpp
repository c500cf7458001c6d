#include "catwalk/triangulation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace catwalk {

namespace {

void check_context(int n_vertices, int m0, const char* who) {
    if (n_vertices < 3)
        throw std::invalid_argument(std::string(who) + ": polygon needs at least 3 vertices");
    if (m0 < 0 || m0 > n_vertices)
        throw std::invalid_argument(std::string(who) + ": forbidden span-2 count " +
                                    std::to_string(m0) + " not in [0, " +
                                    std::to_string(n_vertices) + "]");
}

int cyclic_span(const Diagonal& d, int n_vertices) {
    const int direct = d.high - d.low;
    return std::min(direct, n_vertices - direct);
}

// Normalized chords {a,b} and {c,d} cross iff exactly one of c, d lies
// strictly between a and b. Shared endpoints never cross.
bool diagonals_cross(const Diagonal& x, const Diagonal& y) {
    if (x.low == y.low || x.low == y.high || x.high == y.low || x.high == y.high)
        return false;
    const bool c_inside = x.low < y.low && y.low < x.high;
    const bool d_inside = x.low < y.high && y.high < x.high;
    return c_inside != d_inside;
}

}  // namespace

Diagonal span2_edge(int i, int n_vertices) {
    const int prev = (i - 1 + n_vertices) % n_vertices;
    const int next = (i + 1) % n_vertices;
    return make_diagonal(prev, next);
}

TriangulationVerdict validate_triangulation(int n_vertices, int m0,
                                            const Triangulation& t) {
    check_context(n_vertices, m0, "validate_triangulation");
    const int n = n_vertices;
    if (t.n_vertices != n)
        return {false, "triangulation is for a " + std::to_string(t.n_vertices) +
                           "-gon, context expects " + std::to_string(n)};
    if (t.diagonals.size() != static_cast<std::size_t>(n - 3))
        return {false, "expected exactly " + std::to_string(n - 3) + " diagonals, found " +
                           std::to_string(t.diagonals.size())};

    for (const Diagonal& d : t.diagonals) {
        if (d.low < 0 || d.high >= n || d.low >= d.high)
            return {false, "diagonal endpoints out of range or not normalized"};
        if (d.high - d.low < 2 || (d.low == 0 && d.high == n - 1))
            return {false, "pair {" + std::to_string(d.low) + ", " + std::to_string(d.high) +
                               "} is a polygon side, not a diagonal"};
    }
    for (std::size_t i = 1; i < t.diagonals.size(); ++i)
        if (!(t.diagonals[i - 1] < t.diagonals[i]))
            return {false, "diagonals not sorted or contain duplicates"};

    for (std::size_t i = 0; i < t.diagonals.size(); ++i)
        for (std::size_t j = i + 1; j < t.diagonals.size(); ++j)
            if (diagonals_cross(t.diagonals[i], t.diagonals[j]))
                return {false, "diagonals {" + std::to_string(t.diagonals[i].low) + ", " +
                                   std::to_string(t.diagonals[i].high) + "} and {" +
                                   std::to_string(t.diagonals[j].low) + ", " +
                                   std::to_string(t.diagonals[j].high) + "} cross"};

    for (int i = 0; i < m0; ++i) {
        const Diagonal forbidden = span2_edge(i, n);
        if (std::binary_search(t.diagonals.begin(), t.diagonals.end(), forbidden))
            return {false, "forbidden span-2 edge e_" + std::to_string(i) + " = {" +
                               std::to_string(forbidden.low) + ", " +
                               std::to_string(forbidden.high) + "} is used"};
    }

    if (n >= 5) {
        int ears = 0;
        for (const Diagonal& d : t.diagonals)
            if (cyclic_span(d, n) == 2) ++ears;
        if (ears < 2)
            return {false, "only " + std::to_string(ears) +
                               " span-2 diagonals; a triangulation has at least two"};
    }
    return {};
}

Natural count_triangulations(int n_vertices, int m0, const BcTable& table) {
    check_context(n_vertices, m0, "count_triangulations");
    if (m0 > n_vertices - 2) return 0;
    return table.at(n_vertices - 2, m0);
}

Triangulation decode_triangulation(int n_vertices, int m0, const BranchPath& path,
                                   DecodeStats* stats) {
    check_context(n_vertices, m0, "decode_triangulation");
    if (m0 > n_vertices - 3)
        throw std::domain_error("decode_triangulation: empty structure class (N = " +
                                std::to_string(n_vertices) + ", m0 = " + std::to_string(m0) +
                                ")");

    std::vector<int> labels(n_vertices);
    std::iota(labels.begin(), labels.end(), 0);
    int r = n_vertices;
    int m = m0;
    std::vector<Diagonal> diagonals;
    diagonals.reserve(n_vertices - 3);
    bool closed = false;

    for (std::size_t i = 0; i < path.size(); ++i) {
        if (closed)
            throw std::invalid_argument("decode_triangulation: step " + std::to_string(i) +
                                        " continues past the closing triangle");
        if (stats) ++stats->transitions;
        if (path[i] == Step::L) {
            if (r == 3) {
                closed = true;  // remaining triangle is implicit
                continue;
            }
            diagonals.push_back(
                make_diagonal(labels[(m - 1 + r) % r], labels[(m + 1) % r]));
            labels.erase(labels.begin() + m);
            if (stats) stats->label_updates += static_cast<std::uint64_t>(r - 1 - m);
            m = m > 0 ? m - 1 : 0;
            --r;
        } else {
            // Advancing past the pivot leaves r-2 vertices' classes; more
            // than r-3 missing span-2 edges is an empty class.
            if (m + 1 > r - 3)
                throw std::invalid_argument("decode_triangulation: step " + std::to_string(i) +
                                            " enters an empty class (r = " + std::to_string(r) +
                                            ", m = " + std::to_string(m + 1) + ")");
            ++m;
        }
    }
    if (!closed)
        throw std::invalid_argument(
            "decode_triangulation: path ends before the closing triangle");

    std::sort(diagonals.begin(), diagonals.end());
    return Triangulation{n_vertices, std::move(diagonals)};
}

BranchPath encode_triangulation(int n_vertices, int m0, const Triangulation& t) {
    const TriangulationVerdict verdict = validate_triangulation(n_vertices, m0, t);
    if (!verdict.ok)
        throw std::invalid_argument("encode_triangulation: " + verdict.violation);

    std::vector<int> labels(n_vertices);
    std::iota(labels.begin(), labels.end(), 0);
    int r = n_vertices;
    int m = m0;
    BranchPath path;
    path.reserve(static_cast<std::size_t>(2) * (n_vertices - 2));

    while (r > 3) {
        const Diagonal pivot = make_diagonal(labels[(m - 1 + r) % r], labels[(m + 1) % r]);
        if (std::binary_search(t.diagonals.begin(), t.diagonals.end(), pivot)) {
            path.push_back(Step::L);
            labels.erase(labels.begin() + m);
            m = m > 0 ? m - 1 : 0;
            --r;
        } else {
            if (m + 1 > r - 3)
                throw std::logic_error(
                    "encode_triangulation: ran out of span-2 edges on a validated input");
            path.push_back(Step::R);
            ++m;
        }
    }
    path.push_back(Step::L);
    return path;
}

Triangulation unrank_triangulation(int n_vertices, int m0, const Natural& code,
                                   const BcTable& table) {
    check_context(n_vertices, m0, "unrank_triangulation");
    const Natural total = count_triangulations(n_vertices, m0, table);
    if (total == 0)
        throw std::domain_error("unrank_triangulation: empty structure class");
    if (code < 0 || code >= total)
        throw std::out_of_range("unrank_triangulation: code " + code.str() +
                                " not in [0, " + total.str() + ")");
    const BranchPath path = unrank(table, NodeState{n_vertices - 2, m0}, code);
    return decode_triangulation(n_vertices, m0, path);
}

Code rank_triangulation(int n_vertices, int m0, const Triangulation& t,
                        const BcTable& table) {
    const BranchPath path = encode_triangulation(n_vertices, m0, t);
    return rank(table, NodeState{n_vertices - 2, m0}, path);
}

Triangulation sample_triangulation(int n_vertices, int m0, const BcTable& table,
                                   BitSource& source) {
    check_context(n_vertices, m0, "sample_triangulation");
    const Natural total = count_triangulations(n_vertices, m0, table);
    if (total == 0)
        throw std::domain_error("sample_triangulation: empty structure class (N = " +
                                std::to_string(n_vertices) + ", m0 = " +
                                std::to_string(m0) + ")");
    const SampleResult sample = sample_path(table, NodeState{n_vertices - 2, m0}, source);
    return decode_triangulation(n_vertices, m0, sample.path);
}

std::string triangulation_to_json(const Triangulation& t, int m0) {
    nlohmann::ordered_json j;
    j["n"] = t.n_vertices;
    j["forbidden"] = m0;
    auto& diags = j["diagonals"] = nlohmann::ordered_json::array();
    for (const Diagonal& d : t.diagonals) diags.push_back({d.low, d.high});
    return j.dump();
}

std::pair<Triangulation, int> triangulation_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    if (!j.is_object() || !j.contains("n") || !j.contains("diagonals"))
        throw std::invalid_argument(
            "triangulation_from_json: expected {\"n\", \"forbidden\", \"diagonals\"}");
    Triangulation t;
    t.n_vertices = j.at("n").get<int>();
    const int m0 = j.value("forbidden", 0);
    for (const auto& pair : j.at("diagonals")) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument(
                "triangulation_from_json: each diagonal must be a pair [i, j]");
        t.diagonals.push_back(make_diagonal(pair[0].get<int>(), pair[1].get<int>()));
    }
    std::sort(t.diagonals.begin(), t.diagonals.end());
    return {std::move(t), m0};
}

}  // namespace catwalk
