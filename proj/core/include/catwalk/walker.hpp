#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "catwalk/bc_table.hpp"
#include "catwalk/bit_source.hpp"
#include "catwalk/integers.hpp"

namespace catwalk {

// The counting recursion, read as a binary tree: a node of class (n, m)
// has a left child worth a[n-1][m-1] (or a[n-1][0] when m = 0) and a right
// child worth a[n][m+1]. The single leaf class is (0, 0). Ranking assigns
// the left subtree the low code interval [0, left_count) and the right
// subtree the rest, so codes are lexicographic in the step sequence with
// L < R. Zero-count classes are never entered.

struct NodeState {
    int n = 0;
    int m = 0;
    bool operator==(const NodeState&) const = default;
    bool is_leaf() const { return n == 0 && m == 0; }
};

enum class Step : std::uint8_t { L, R };

using BranchPath = std::vector<Step>;

struct Code {
    Natural value;
    NodeState root;
};

/// (n,0) -> (n-1,0); (n,m) -> (n-1,m-1) for m >= 1. Rejects the leaf.
NodeState left_child(NodeState s);

/// (n,m) -> (n,m+1). Rejects the leaf and m + 1 > n.
NodeState right_child(NodeState s);

struct WalkStats {
    std::uint64_t table_lookups = 0;
};

/// Walks the tree from `root` spending `code` on subtree sizes: at each
/// node take L while the residual is below the left count, else subtract
/// it and take R. Bijective over code in [0, a[root]).
BranchPath unrank(const BcTable& table, NodeState root, const Natural& code,
                  WalkStats* stats = nullptr);

/// Exact inverse of unrank: sums the skipped left counts at every R step.
/// Rejects paths with illegal steps, a wrong terminal, or a zero-count
/// state; the exception message names the failing step index.
Code rank(const BcTable& table, NodeState root, const BranchPath& path);

/// Big-endian, fixed width ceil(log2(a[root])) bits, zero padded. A root
/// with a single outcome yields the empty string.
std::string code_to_bits(const Code& code, const BcTable& table);

/// Inverse of code_to_bits; the bit string must have exactly the fixed
/// width for `root` and decode below a[root].
Code bits_to_code(std::string_view bits, NodeState root, const BcTable& table);

// Codeword wire format: the code_to_bits string packed MSB-first into
// bytes, with the final partial byte zero-padded on the right. Header-free;
// the receiver derives the bit width from `root`.
std::vector<std::uint8_t> pack_code(const Code& code, const BcTable& table);
Code unpack_code(const std::vector<std::uint8_t>& bytes, NodeState root,
                 const BcTable& table);

struct SampleResult {
    Code code;
    BranchPath path;
};

/// One uniform draw below a[root], then a deterministic walk. Exactly
/// uniform over leaves because unrank is a bijection. Bits consumed are
/// visible on the source's counter.
SampleResult sample_path(const BcTable& table, NodeState root, BitSource& source);

// Path <-> "LRLL..." text, the CLI-facing spelling of a branch sequence.
std::string path_to_string(const BranchPath& path);
BranchPath parse_path(std::string_view text);

}  // namespace catwalk
