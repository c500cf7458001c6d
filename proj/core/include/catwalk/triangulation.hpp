#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "catwalk/bc_table.hpp"
#include "catwalk/bit_source.hpp"
#include "catwalk/integers.hpp"
#include "catwalk/walker.hpp"

namespace catwalk {

// Triangulations of the properly labeled convex N-gon (vertices v_0..v_{N-1}
// in cyclic order), including the generalized family that forbids the first
// m0 consecutive span-2 edges e_0..e_{m0-1}, where e_i = {i-1, i+1} mod N.
// Such a context maps onto walker root (N-2, m0), and its structure count
// is the table cell a[N-2][m0].

// Unordered vertex pair, normalized low < high.
struct Diagonal {
    int low = 0;
    int high = 0;
    auto operator<=>(const Diagonal&) const = default;
};

inline Diagonal make_diagonal(int a, int b) {
    return a < b ? Diagonal{a, b} : Diagonal{b, a};
}

/// The span-2 edge e_i = {i-1 mod N, i+1 mod N}.
Diagonal span2_edge(int i, int n_vertices);

// N-3 pairwise non-crossing diagonals of the N-gon. Diagonals are kept
// normalized and lexicographically sorted, so equal triangulations compare
// equal.
struct Triangulation {
    int n_vertices = 0;
    std::vector<Diagonal> diagonals;
    bool operator==(const Triangulation&) const = default;
    bool operator<(const Triangulation& other) const {
        return diagonals < other.diagonals;
    }
};

struct TriangulationVerdict {
    bool ok = true;
    std::string violation;  // first violated rule, empty when ok
};

/// Structural check: cardinality N-3, endpoints in range and non-adjacent,
/// no duplicates, pairwise non-crossing, no forbidden edge e_i (i < m0),
/// and at least two span-2 diagonals for N >= 5.
TriangulationVerdict validate_triangulation(int n_vertices, int m0,
                                            const Triangulation& t);

/// a[N-2][m0]; zero for m0 in (N-2, N]. Rejects N < 3, m0 < 0, m0 > N.
Natural count_triangulations(int n_vertices, int m0, const BcTable& table);

struct DecodeStats {
    std::uint64_t transitions = 0;    // state-machine steps consumed
    std::uint64_t label_updates = 0;  // label-map cells moved on deletions
};

// Replays a branch path from root (N-2, m0) through the reduction: an
// L step commits the current pivot edge as a diagonal and deletes the
// pivot vertex (relabeling by skipping it, which lands the still-missing
// edges back at e_0..e_{m-1}); an R step marks the pivot edge excluded and
// advances to the next span-2 edge. The final L step onto the leaf closes
// the remaining triangle and records nothing.
Triangulation decode_triangulation(int n_vertices, int m0, const BranchPath& path,
                                   DecodeStats* stats = nullptr);

/// Inverse of decode: walks the same machine, taking L exactly when the
/// pivot edge is one of the triangulation's diagonals. Validates first.
BranchPath encode_triangulation(int n_vertices, int m0, const Triangulation& t);

Triangulation unrank_triangulation(int n_vertices, int m0, const Natural& code,
                                   const BcTable& table);
Code rank_triangulation(int n_vertices, int m0, const Triangulation& t,
                        const BcTable& table);

/// Exactly uniform over the triangulations of the context. Throws
/// std::domain_error for empty classes (e.g. m0 = N-2 on N >= 5).
Triangulation sample_triangulation(int n_vertices, int m0, const BcTable& table,
                                   BitSource& source);

// JSON lines: {"n": N, "forbidden": m0, "diagonals": [[i, j], ...]} with
// sorted pairs and a lexicographically sorted list.
std::string triangulation_to_json(const Triangulation& t, int m0);
/// Parses the JSON form; returns the triangulation and forbidden count.
std::pair<Triangulation, int> triangulation_from_json(const std::string& text);

}  // namespace catwalk
