#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "catwalk/bc_table.hpp"
#include "catwalk/bit_source.hpp"
#include "catwalk/integers.hpp"
#include "catwalk/walker.hpp"

namespace catwalk {

// Mountain ranges: 2n strokes over {U, D}, equal counts, no prefix dipping
// below the horizon. Walker state (n, m) corresponds to standing at height
// m + 1 with n downstrokes still owed, so decoding a branch path is a
// single linear pass:
//
//   entering the root (n, 0), n >= 1   emits U   (the forced upstroke)
//   L step from (n, 0)                 emits DU, or just D onto the leaf
//   L step from (n, m), m >= 1         emits D
//   R step                             emits U
//
// Codes are increasing in lexicographic word order with D < U.

struct DyckWord {
    std::string strokes;  // over {'U', 'D'}
    bool operator==(const DyckWord&) const = default;
    bool operator<(const DyckWord& other) const { return strokes < other.strokes; }
    int half_length() const { return static_cast<int>(strokes.size()) / 2; }
};

/// Balanced, prefix-nonnegative check. Throws std::invalid_argument naming
/// the first offending position.
void require_valid_dyck(const DyckWord& word);

struct DyckStats {
    std::uint64_t emissions = 0;
};

/// Replays a branch path from root (n, 0) into the 2n-stroke word.
DyckWord decode_dyck(int n, const BranchPath& path, DyckStats* stats = nullptr);

/// Inverse of decode_dyck: consumes the forced upstroke at each return to
/// the horizon, maps U to R and D to L elsewhere.
BranchPath encode_dyck(const DyckWord& word);

DyckWord unrank_dyck(int n, const Natural& code, const BcTable& table);
Code rank_dyck(const DyckWord& word, const BcTable& table);
DyckWord sample_dyck(int n, const BcTable& table, BitSource& source);

enum class LatticeStep : std::uint8_t { Right, Up };

/// U -> Right, D -> Up; the path stays weakly below the diagonal.
std::vector<LatticeStep> dyck_to_lattice_path(const DyckWord& word);

/// U -> '(', D -> ')'.
std::string dyck_to_parentheses(const DyckWord& word);

}  // namespace catwalk
