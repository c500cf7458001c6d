#include "catwalk/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace catwalk {
namespace oracle {

namespace {

// Diagonal sets for the sub-polygon v_lo..v_hi closed by the chord (lo, hi).
std::vector<std::vector<Diagonal>> split_recursion(int lo, int hi) {
    std::vector<std::vector<Diagonal>> out;
    if (hi - lo < 2) {
        out.emplace_back();
        return out;
    }
    for (int apex = lo + 1; apex < hi; ++apex) {
        const auto left = split_recursion(lo, apex);
        const auto right = split_recursion(apex, hi);
        for (const auto& l : left)
            for (const auto& r : right) {
                std::vector<Diagonal> diags;
                diags.reserve(l.size() + r.size() + 2);
                diags.insert(diags.end(), l.begin(), l.end());
                diags.insert(diags.end(), r.begin(), r.end());
                if (apex - lo >= 2) diags.push_back(make_diagonal(lo, apex));
                if (hi - apex >= 2) diags.push_back(make_diagonal(apex, hi));
                out.push_back(std::move(diags));
            }
    }
    return out;
}

void backtrack_dyck(std::string& prefix, int ups_left, int height, int n,
                    std::vector<DyckWord>& out) {
    if (prefix.size() == static_cast<std::size_t>(2 * n)) {
        out.push_back(DyckWord{prefix});
        return;
    }
    // 'D' before 'U' keeps the output lexicographic.
    if (height > 0) {
        prefix.push_back('D');
        backtrack_dyck(prefix, ups_left, height - 1, n, out);
        prefix.pop_back();
    }
    if (ups_left > 0) {
        prefix.push_back('U');
        backtrack_dyck(prefix, ups_left - 1, height + 1, n, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Triangulation> enumerate_triangulations(int n_vertices, int guard) {
    if (n_vertices < 3)
        throw std::invalid_argument("enumerate_triangulations: need at least 3 vertices");
    if (n_vertices > guard)
        throw std::invalid_argument("enumerate_triangulations: N = " +
                                    std::to_string(n_vertices) + " exceeds guard " +
                                    std::to_string(guard));

    auto diagonal_sets = split_recursion(0, n_vertices - 1);
    std::vector<Triangulation> out;
    out.reserve(diagonal_sets.size());
    for (auto& diags : diagonal_sets) {
        std::sort(diags.begin(), diags.end());
        out.push_back(Triangulation{n_vertices, std::move(diags)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

Natural count_avoiding(int n_vertices, const std::vector<Diagonal>& forbidden,
                       int guard) {
    const auto all = enumerate_triangulations(n_vertices, guard);
    Natural count = 0;
    for (const auto& t : all) {
        bool uses_forbidden = false;
        for (const Diagonal& f : forbidden)
            if (std::binary_search(t.diagonals.begin(), t.diagonals.end(), f)) {
                uses_forbidden = true;
                break;
            }
        if (!uses_forbidden) ++count;
    }
    return count;
}

std::vector<DyckWord> enumerate_dyck(int n, int guard) {
    if (n < 0) throw std::invalid_argument("enumerate_dyck: n must be >= 0");
    if (n > guard)
        throw std::invalid_argument("enumerate_dyck: n = " + std::to_string(n) +
                                    " exceeds guard " + std::to_string(guard));
    std::vector<DyckWord> out;
    std::string prefix;
    prefix.reserve(2 * n);
    backtrack_dyck(prefix, n, 0, n, out);
    return out;
}

}  // namespace oracle
}  // namespace catwalk
