#include "catwalk/dyck.hpp"

#include <stdexcept>
#include <string>

namespace catwalk {

void require_valid_dyck(const DyckWord& word) {
    int height = 0;
    for (std::size_t i = 0; i < word.strokes.size(); ++i) {
        const char c = word.strokes[i];
        if (c == 'U') ++height;
        else if (c == 'D') --height;
        else
            throw std::invalid_argument("dyck word: invalid stroke '" + std::string(1, c) +
                                        "' at position " + std::to_string(i));
        if (height < 0)
            throw std::invalid_argument("dyck word: prefix dips below the horizon at position " +
                                        std::to_string(i));
    }
    if (height != 0)
        throw std::invalid_argument("dyck word: unbalanced, height " + std::to_string(height) +
                                    " after position " + std::to_string(word.strokes.size()));
}

DyckWord decode_dyck(int n, const BranchPath& path, DyckStats* stats) {
    if (n < 0) throw std::invalid_argument("decode_dyck: n must be >= 0");

    std::string strokes;
    strokes.reserve(static_cast<std::size_t>(2) * n);
    const auto emit = [&](char c) {
        strokes.push_back(c);
        if (stats) ++stats->emissions;
    };

    NodeState state{n, 0};
    if (n >= 1) emit('U');
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (state.is_leaf())
            throw std::invalid_argument("decode_dyck: step " + std::to_string(i) +
                                        " continues past the leaf");
        if (path[i] == Step::L) {
            const NodeState next = left_child(state);
            if (next.is_leaf()) emit('D');
            else if (state.m == 0) { emit('D'); emit('U'); }
            else emit('D');
            state = next;
        } else {
            // (n, n) is an empty class; valid paths never move into it.
            if (state.m + 1 >= state.n)
                throw std::invalid_argument("decode_dyck: step " + std::to_string(i) +
                                            " enters an empty class");
            state = right_child(state);
            emit('U');
        }
    }
    if (!state.is_leaf())
        throw std::invalid_argument("decode_dyck: path ends at (" + std::to_string(state.n) +
                                    ", " + std::to_string(state.m) + "), not the leaf");
    return DyckWord{std::move(strokes)};
}

BranchPath encode_dyck(const DyckWord& word) {
    require_valid_dyck(word);
    BranchPath path;
    path.reserve(word.strokes.size());
    const std::size_t length = word.strokes.size();
    if (length == 0) return path;

    // strokes[0] is the forced upstroke consumed on entering the root.
    int height = 1;
    std::size_t i = 1;
    while (i < length) {
        if (word.strokes[i] == 'U') {
            path.push_back(Step::R);
            ++height;
            ++i;
        } else {
            path.push_back(Step::L);
            --height;
            ++i;
            if (height == 0 && i < length) {
                // back on the horizon: the next stroke is the forced U,
                // already part of this L step
                ++height;
                ++i;
            }
        }
    }
    return path;
}

DyckWord unrank_dyck(int n, const Natural& code, const BcTable& table) {
    if (n < 0) throw std::invalid_argument("unrank_dyck: n must be >= 0");
    const BranchPath path = unrank(table, NodeState{n, 0}, code);
    return decode_dyck(n, path);
}

Code rank_dyck(const DyckWord& word, const BcTable& table) {
    if (word.strokes.size() % 2 != 0)
        throw std::invalid_argument("rank_dyck: odd number of strokes");
    const BranchPath path = encode_dyck(word);
    return rank(table, NodeState{word.half_length(), 0}, path);
}

DyckWord sample_dyck(int n, const BcTable& table, BitSource& source) {
    if (n < 0) throw std::invalid_argument("sample_dyck: n must be >= 0");
    const SampleResult sample = sample_path(table, NodeState{n, 0}, source);
    return decode_dyck(n, sample.path);
}

std::vector<LatticeStep> dyck_to_lattice_path(const DyckWord& word) {
    require_valid_dyck(word);
    std::vector<LatticeStep> steps;
    steps.reserve(word.strokes.size());
    for (char c : word.strokes)
        steps.push_back(c == 'U' ? LatticeStep::Right : LatticeStep::Up);
    return steps;
}

std::string dyck_to_parentheses(const DyckWord& word) {
    require_valid_dyck(word);
    std::string out;
    out.reserve(word.strokes.size());
    for (char c : word.strokes) out.push_back(c == 'U' ? '(' : ')');
    return out;
}

}  // namespace catwalk
