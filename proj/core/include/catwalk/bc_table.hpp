#pragma once

#include <cstddef>
#include <vector>

#include "catwalk/integers.hpp"

namespace catwalk {

// Triangular table of counts a[n][m], 0 <= m <= n <= n_max, built once from
// the two-parameter recursion
//
//     a[0][0] = 1,   a[n][n] = 0              (n >= 1)
//     a[n][m] = a[n-1][m-1] + a[n][m+1]       (1 <= m <= n-1)
//     a[n][0] = a[n-1][0] + a[n][1]
//
// Row n column 0 is the n-th Catalan number; the other columns are ballot
// numbers. The table is the shared preprocessing artifact: every rank,
// unrank and sampling routine only reads it.
//
// Immutable after construction; safe to share across threads.
class BcTable {
public:
    // Storage grows roughly as n_max^3 / 8 bytes, so construction refuses
    // n_max beyond row_cap. Raise the cap explicitly for bigger tables.
    static constexpr int kDefaultRowCap = 2000;

    explicit BcTable(int n_max, int row_cap = kDefaultRowCap);

    // Adopts precomputed rows (e.g. from a cache file). Validates shape and
    // the a[0][0] / a[n][n] anchors, not the full recursion; callers who
    // distrust the source can run verify_recursion().
    explicit BcTable(std::vector<std::vector<Natural>> rows);

    int n_max() const { return n_max_; }

    /// a[n][m]. Throws std::out_of_range unless 0 <= m <= n <= n_max.
    const Natural& at(int n, int m) const;

    /// Row n as a span of n+1 cells, columns 0..n.
    const Natural* row_begin(int n) const;

    /// Re-evaluates every recursion identity on the stored cells.
    bool verify_recursion() const;

    bool operator==(const BcTable& other) const = default;

private:
    static std::size_t row_offset(int n) {
        return static_cast<std::size_t>(n) * (n + 1) / 2;
    }

    int n_max_ = 0;
    std::vector<Natural> cells_;  // row-major triangular, row n has n+1 cells
};

}  // namespace catwalk
