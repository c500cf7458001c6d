#include "catwalk/walker.hpp"

#include <stdexcept>
#include <string>

namespace catwalk {

namespace {

std::string state_name(NodeState s) {
    return "(" + std::to_string(s.n) + ", " + std::to_string(s.m) + ")";
}

void check_state(const BcTable& table, NodeState s, const char* who) {
    if (s.m < 0 || s.n < 0 || s.m > s.n || s.n > table.n_max())
        throw std::invalid_argument(std::string(who) + ": state " + state_name(s) +
                                    " outside table range (n_max " +
                                    std::to_string(table.n_max()) + ")");
}

}  // namespace

NodeState left_child(NodeState s) {
    if (s.is_leaf()) throw std::invalid_argument("left_child: leaf (0, 0) has no children");
    if (s.m == 0) return {s.n - 1, 0};
    return {s.n - 1, s.m - 1};
}

NodeState right_child(NodeState s) {
    if (s.is_leaf()) throw std::invalid_argument("right_child: leaf (0, 0) has no children");
    if (s.m + 1 > s.n)
        throw std::invalid_argument("right_child: m + 1 > n at " + state_name(s));
    return {s.n, s.m + 1};
}

BranchPath unrank(const BcTable& table, NodeState root, const Natural& code,
                  WalkStats* stats) {
    check_state(table, root, "unrank");
    const Natural& total = table.at(root.n, root.m);
    if (total == 0)
        throw std::domain_error("unrank: empty class at root " + state_name(root));
    if (code < 0 || code >= total)
        throw std::out_of_range("unrank: code " + code.str() + " not in [0, " +
                                total.str() + ") at root " + state_name(root));

    BranchPath path;
    path.reserve(static_cast<std::size_t>(2) * root.n);
    NodeState state = root;
    Natural residual = code;
    while (!state.is_leaf()) {
        const NodeState left = left_child(state);
        const Natural& left_count = table.at(left.n, left.m);
        if (stats) ++stats->table_lookups;
        if (residual < left_count) {
            path.push_back(Step::L);
            state = left;
        } else {
            residual -= left_count;
            path.push_back(Step::R);
            state = right_child(state);
        }
    }
    return path;
}

Code rank(const BcTable& table, NodeState root, const BranchPath& path) {
    check_state(table, root, "rank");
    if (table.at(root.n, root.m) == 0)
        throw std::domain_error("rank: empty class at root " + state_name(root));

    NodeState state = root;
    Natural value = 0;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (state.is_leaf())
            throw std::invalid_argument("rank: step " + std::to_string(i) +
                                        " continues past the leaf");
        NodeState next;
        if (path[i] == Step::L) {
            next = left_child(state);
        } else {
            if (state.m + 1 > state.n)
                throw std::invalid_argument("rank: illegal R step at index " +
                                            std::to_string(i) + " from " + state_name(state));
            value += table.at(state.n - 1, state.m == 0 ? 0 : state.m - 1);
            next = right_child(state);
        }
        if (table.at(next.n, next.m) == 0)
            throw std::invalid_argument("rank: step " + std::to_string(i) +
                                        " enters empty class " + state_name(next));
        state = next;
    }
    if (!state.is_leaf())
        throw std::invalid_argument("rank: path ends at " + state_name(state) +
                                    ", expected the leaf (0, 0); failing step index " +
                                    std::to_string(path.size()));
    return Code{value, root};
}

std::string code_to_bits(const Code& code, const BcTable& table) {
    check_state(table, code.root, "code_to_bits");
    const Natural& total = table.at(code.root.n, code.root.m);
    if (total == 0)
        throw std::domain_error("code_to_bits: empty class at root " + state_name(code.root));
    if (code.value < 0 || code.value >= total)
        throw std::out_of_range("code_to_bits: code " + code.value.str() +
                                " not in [0, " + total.str() + ")");

    const int width = ceil_log2(total);
    std::string bits(static_cast<std::size_t>(width), '0');
    for (int i = 0; i < width; ++i)
        if (boost::multiprecision::bit_test(code.value, i)) bits[width - 1 - i] = '1';
    return bits;
}

Code bits_to_code(std::string_view bits, NodeState root, const BcTable& table) {
    check_state(table, root, "bits_to_code");
    const Natural& total = table.at(root.n, root.m);
    if (total == 0)
        throw std::domain_error("bits_to_code: empty class at root " + state_name(root));

    const int width = ceil_log2(total);
    if (bits.size() != static_cast<std::size_t>(width))
        throw std::invalid_argument("bits_to_code: expected exactly " + std::to_string(width) +
                                    " bits, got " + std::to_string(bits.size()));
    Natural value = 0;
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("bits_to_code: bit string may contain only 0 and 1");
        value <<= 1;
        if (c == '1') value |= 1;
    }
    if (value >= total)
        throw std::out_of_range("bits_to_code: decoded value " + value.str() +
                                " not below " + total.str());
    return Code{value, root};
}

std::vector<std::uint8_t> pack_code(const Code& code, const BcTable& table) {
    const std::string bits = code_to_bits(code, table);
    std::vector<std::uint8_t> bytes((bits.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i] == '1') bytes[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
    return bytes;
}

Code unpack_code(const std::vector<std::uint8_t>& bytes, NodeState root,
                 const BcTable& table) {
    check_state(table, root, "unpack_code");
    const Natural& total = table.at(root.n, root.m);
    if (total == 0)
        throw std::domain_error("unpack_code: empty class at root " + state_name(root));
    const int width = ceil_log2(total);
    if (bytes.size() != static_cast<std::size_t>(width + 7) / 8)
        throw std::invalid_argument("unpack_code: expected " +
                                    std::to_string((width + 7) / 8) + " bytes, got " +
                                    std::to_string(bytes.size()));
    std::string bits;
    bits.reserve(width);
    for (int i = 0; i < width; ++i) {
        const std::uint8_t byte = bytes[static_cast<std::size_t>(i) / 8];
        bits.push_back(byte & (0x80u >> (i % 8)) ? '1' : '0');
    }
    // Padding bits past the width must be zero.
    for (std::size_t i = static_cast<std::size_t>(width); i < bytes.size() * 8; ++i)
        if (bytes[i / 8] & (0x80u >> (i % 8)))
            throw std::invalid_argument("unpack_code: nonzero padding bit at " +
                                        std::to_string(i));
    return bits_to_code(bits, root, table);
}

SampleResult sample_path(const BcTable& table, NodeState root, BitSource& source) {
    check_state(table, root, "sample_path");
    const Natural& total = table.at(root.n, root.m);
    if (total == 0)
        throw std::domain_error("sample_path: empty class at root " + state_name(root));
    Natural value = uniform_below(total, source);
    BranchPath path = unrank(table, root, value);
    return SampleResult{Code{std::move(value), root}, std::move(path)};
}

std::string path_to_string(const BranchPath& path) {
    std::string out;
    out.reserve(path.size());
    for (Step s : path) out.push_back(s == Step::L ? 'L' : 'R');
    return out;
}

BranchPath parse_path(std::string_view text) {
    BranchPath path;
    path.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == 'L') path.push_back(Step::L);
        else if (text[i] == 'R') path.push_back(Step::R);
        else
            throw std::invalid_argument("parse_path: invalid step character at index " +
                                        std::to_string(i));
    }
    return path;
}

}  // namespace catwalk
