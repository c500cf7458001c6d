#pragma once

#include "catwalk/integers.hpp"

namespace catwalk {

/// binom(n, k), exact. Zero for k < 0 or k > n.
Natural binomial(int n, int k);

/// n-th Catalan number, binom(2n, n) / (n + 1). Independent of BcTable.
Natural catalan(int n);

// Ballot number N(i, j) = ((i+1-j) / (i+1+j)) * binom(i+1+j, j), computed
// by exact integer division (the numerator is always divisible). N(i, -1)
// is defined as 0. Arguments outside -1 <= j <= i are rejected.
//
// Cross-check identity against the table: a[n][m] = ballot(n, n-1-m).
Natural ballot(int i, int j);

}  // namespace catwalk
