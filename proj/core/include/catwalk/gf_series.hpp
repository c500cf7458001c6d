#pragma once

#include <vector>

#include "catwalk/bc_table.hpp"
#include "catwalk/integers.hpp"

namespace catwalk {

struct GfMismatch {
    int i = 0;
    int j = 0;
    Integer series_value;
    Natural table_value;
};

struct GfReport {
    int degree = 0;
    std::vector<GfMismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};

// Expands G(x, y) = (1 - x y) (Cat(x) - y) / (1 - y + x y^2) as a truncated
// bivariate integer power series and compares coefficient(x^i y^j) with
// a[i][j] for all 0 <= i, j <= degree (cells with j > i count as 0).
//
// This form of the generating function keeps every series coefficient an
// integer: the radical in the closed form satisfies
// 1 - sqrt(1 - 4x) = 2x Cat(x), so the 2x denominator cancels. The Catalan
// series itself comes from the closed form, not the table, which keeps the
// comparison an independent check.
//
// Requires degree <= table.n_max().
GfReport verify_generating_function(const BcTable& table, int degree);

}  // namespace catwalk
