#pragma once

#include <vector>

#include "catwalk/dyck.hpp"
#include "catwalk/integers.hpp"
#include "catwalk/triangulation.hpp"

namespace catwalk {
namespace oracle {

// Brute-force enumerators, independent of the table and the walker. They
// exist to certify the fast path at desk scale, so the size guards are
// deliberate; pass a larger guard explicitly if you accept the blowup.

inline constexpr int kTriangulationGuard = 13;  // C_11 = 58786 structures
inline constexpr int kDyckGuard = 14;

/// All C_{N-2} triangulations of the convex N-gon, canonical form, sorted,
/// no duplicates. Splits on the apex of the triangle over edge (0, N-1).
std::vector<Triangulation> enumerate_triangulations(int n_vertices,
                                                    int guard = kTriangulationGuard);

/// Number of enumerated triangulations using none of the given diagonals.
Natural count_avoiding(int n_vertices, const std::vector<Diagonal>& forbidden,
                       int guard = kTriangulationGuard);

/// All C_n Dyck words in lexicographic order (D < U), by backtracking.
std::vector<DyckWord> enumerate_dyck(int n, int guard = kDyckGuard);

}  // namespace oracle
}  // namespace catwalk
