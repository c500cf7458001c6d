#include "catwalk/bc_table.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace catwalk {

BcTable::BcTable(int n_max, int row_cap) : n_max_(n_max) {
    if (n_max < 0) throw std::invalid_argument("BcTable: n_max must be >= 0");
    if (n_max > row_cap)
        throw std::length_error("BcTable: n_max " + std::to_string(n_max) +
                                " exceeds row cap " + std::to_string(row_cap) +
                                " (storage grows ~n^3/8 bytes; raise row_cap to override)");

    cells_.resize(row_offset(n_max) + static_cast<std::size_t>(n_max) + 1);
    cells_[0] = 1;  // a[0][0]

    // Row fill order: a[n][n] = 0, then m = n-1 down to 1, finally m = 0.
    for (int n = 1; n <= n_max; ++n) {
        Natural* row = cells_.data() + row_offset(n);
        const Natural* prev = cells_.data() + row_offset(n - 1);
        row[n] = 0;
        for (int m = n - 1; m >= 1; --m) row[m] = prev[m - 1] + row[m + 1];
        row[0] = prev[0] + row[1];
    }
}

BcTable::BcTable(std::vector<std::vector<Natural>> rows) {
    if (rows.empty()) throw std::invalid_argument("BcTable: no rows");
    n_max_ = static_cast<int>(rows.size()) - 1;
    cells_.reserve(row_offset(n_max_) + static_cast<std::size_t>(n_max_) + 1);
    for (int n = 0; n <= n_max_; ++n) {
        if (rows[n].size() != static_cast<std::size_t>(n) + 1)
            throw std::invalid_argument("BcTable: row " + std::to_string(n) +
                                        " must have exactly " + std::to_string(n + 1) +
                                        " cells");
        for (auto& cell : rows[n]) {
            if (cell < 0)
                throw std::invalid_argument("BcTable: negative cell in row " +
                                            std::to_string(n));
            cells_.push_back(std::move(cell));
        }
    }
    if (cells_[0] != 1) throw std::invalid_argument("BcTable: a[0][0] must be 1");
    for (int n = 1; n <= n_max_; ++n)
        if (cells_[row_offset(n) + n] != 0)
            throw std::invalid_argument("BcTable: a[n][n] must be 0 at n = " +
                                        std::to_string(n));
}

const Natural& BcTable::at(int n, int m) const {
    if (n < 0 || n > n_max_ || m < 0 || m > n)
        throw std::out_of_range("BcTable::at(" + std::to_string(n) + ", " +
                                std::to_string(m) + "): need 0 <= m <= n <= " +
                                std::to_string(n_max_));
    return cells_[row_offset(n) + static_cast<std::size_t>(m)];
}

const Natural* BcTable::row_begin(int n) const {
    if (n < 0 || n > n_max_)
        throw std::out_of_range("BcTable::row_begin(" + std::to_string(n) + ")");
    return cells_.data() + row_offset(n);
}

bool BcTable::verify_recursion() const {
    if (cells_[0] != 1) return false;
    for (int n = 1; n <= n_max_; ++n) {
        const Natural* row = cells_.data() + row_offset(n);
        const Natural* prev = cells_.data() + row_offset(n - 1);
        if (row[n] != 0) return false;
        for (int m = n - 1; m >= 1; --m)
            if (row[m] != prev[m - 1] + row[m + 1]) return false;
        if (row[0] != prev[0] + row[1]) return false;
    }
    return true;
}

}  // namespace catwalk
