#pragma once

// Tableaux recording how a permutation ending in 0 gets sorted.
//
// Write s^k for the k-th iterate of the stack-sorting map.  In the prefix
// of s^(i-1)(p) before the 0, the entries exceeding everything after them
// (within the prefix) are the "columns" of round i; the runs between them
// are the "blocks".  One round of sorting turns each block into its sorted
// image and promotes the block maxima to the next round's columns, so every
// value lands in a column exactly once.  Recording (round, row) per value
// fills a composition diagram; the filling decreases along rows and down
// columns, i.e. it is a linear extension of the dominance order.

#include <cassert>
#include <stdexcept>
#include <vector>

#include "composition.hpp"
#include "permutation.hpp"

namespace stacksort {

struct ColumnBlocks {
    std::vector<int> columns;      // right-to-left maxima of the prefix
    std::vector<Perm> blocks;      // blocks[k] sits just before columns[k]
};

namespace detail {

// Split a 0-free prefix into blocks and their trailing maxima.
inline ColumnBlocks split_prefix(const Perm& prefix) {
    ColumnBlocks out;
    std::vector<char> is_col(prefix.size(), 0);
    int best = -1;
    for (std::size_t k = prefix.size(); k-- > 0;) {
        if (prefix[k] > best) {
            best = prefix[k];
            is_col[k] = 1;
        }
    }
    Perm block;
    for (std::size_t k = 0; k < prefix.size(); ++k) {
        if (is_col[k]) {
            out.columns.push_back(prefix[k]);
            out.blocks.push_back(block);
            block.clear();
        } else {
            block.push_back(prefix[k]);
        }
    }
    assert(block.empty());
    return out;
}

inline Perm prefix_before_zero(const Perm& q) {
    Perm out;
    for (int x : q) {
        if (x == 0) return out;
        out.push_back(x);
    }
    throw std::invalid_argument("expected an entry 0");
}

} // namespace detail

// Columns and blocks of round i (1-based), read off s^(i-1)(p).
// Rejects i once the iterate is already sorted.
inline ColumnBlocks column_blocks(const Perm& p, int i) {
    if (!is_primed(p))
        throw std::invalid_argument("column_blocks: permutation must end in its minimum 0");
    if (i < 1) throw std::out_of_range("column_blocks: round index must be >= 1");
    Perm q(p);
    for (int k = 1; k < i; ++k) q = stack_sort(q);
    if (is_sorted_perm(q))
        throw std::out_of_range("column_blocks: round index exceeds sorting depth");
    return detail::split_prefix(detail::prefix_before_zero(q));
}

// A filling of a composition diagram: a bijection between values 1..n and
// the cells of D(shape).  Construction checks the bijection only; use
// is_linear_extension for the order condition.
class Tableau {
public:
    Tableau() = default;

    Tableau(Composition shape, std::vector<Cell> cell_of)
        : shape_(std::move(shape)), cell_of_(std::move(cell_of)) {
        const int n = shape_.size();
        if (static_cast<int>(cell_of_.size()) != n)
            throw std::invalid_argument("tableau: need exactly one cell per value 1..n");
        grid_.assign(static_cast<std::size_t>(shape_.length()), {});
        for (int j = 1; j <= shape_.length(); ++j)
            grid_[static_cast<std::size_t>(j) - 1].assign(static_cast<std::size_t>(shape_.part(j)), 0);
        for (int v = 1; v <= n; ++v) {
            const Cell c = cell_of_[static_cast<std::size_t>(v) - 1];
            if (!shape_.contains(c))
                throw std::invalid_argument("tableau: cell outside the diagram");
            int& slot = grid_[static_cast<std::size_t>(c.row) - 1][static_cast<std::size_t>(c.col) - 1];
            if (slot != 0) throw std::invalid_argument("tableau: two values share a cell");
            slot = v;
        }
    }

    const Composition& shape() const { return shape_; }
    int size() const { return static_cast<int>(cell_of_.size()); }

    Cell cell_of(int value) const {
        if (value < 1 || value > size())
            throw std::out_of_range("tableau: value out of range");
        return cell_of_[static_cast<std::size_t>(value) - 1];
    }

    int value_at(int col, int row) const {
        if (!shape_.contains(col, row))
            throw std::out_of_range("tableau: cell outside the diagram");
        return grid_[static_cast<std::size_t>(row) - 1][static_cast<std::size_t>(col) - 1];
    }
    int value_at(const Cell& c) const { return value_at(c.col, c.row); }

    const std::vector<Cell>& cells_by_value() const { return cell_of_; }

    friend bool operator==(const Tableau& a, const Tableau& b) {
        return a.shape_ == b.shape_ && a.cell_of_ == b.cell_of_;
    }
    friend bool operator!=(const Tableau& a, const Tableau& b) { return !(a == b); }
    friend bool operator<(const Tableau& a, const Tableau& b) {
        if (a.shape_ != b.shape_) return a.shape_ < b.shape_;
        return a.cell_of_ < b.cell_of_;
    }

private:
    Composition shape_;
    std::vector<Cell> cell_of_;            // value v sits at cell_of_[v-1]
    std::vector<std::vector<int>> grid_;   // grid_[row-1][col-1] = value
};

// Does cell_of describe a bijection [n] -> D(shape) whose labels respect
// dominance (larger cell, larger value)?  Along a row the values must
// decrease rightwards, and down a column they must decrease across gaps;
// those cover relations already force the full order condition.
inline bool is_linear_extension(const Composition& shape, const std::vector<Cell>& cell_of) {
    const int n = shape.size();
    if (static_cast<int>(cell_of.size()) != n) return false;
    std::vector<std::vector<int>> grid(static_cast<std::size_t>(shape.length()));
    for (int j = 1; j <= shape.length(); ++j)
        grid[static_cast<std::size_t>(j) - 1].assign(static_cast<std::size_t>(shape.part(j)), 0);
    for (int v = 1; v <= n; ++v) {
        const Cell c = cell_of[static_cast<std::size_t>(v) - 1];
        if (!shape.contains(c)) return false;
        int& slot = grid[static_cast<std::size_t>(c.row) - 1][static_cast<std::size_t>(c.col) - 1];
        if (slot != 0) return false;
        slot = v;
    }
    for (int j = 1; j <= shape.length(); ++j)
        for (int i = 1; i + 1 <= shape.part(j); ++i)
            if (grid[static_cast<std::size_t>(j) - 1][static_cast<std::size_t>(i) - 1] <
                grid[static_cast<std::size_t>(j) - 1][static_cast<std::size_t>(i)])
                return false;
    for (int i = 1; i <= shape.width(); ++i) {
        int prev = 0;  // value in the nearest present cell above
        for (int j = 1; j <= shape.length(); ++j) {
            if (!shape.contains(i, j)) continue;
            int cur = grid[static_cast<std::size_t>(j) - 1][static_cast<std::size_t>(i) - 1];
            if (prev != 0 && prev < cur) return false;
            prev = cur;
        }
    }
    return true;
}

inline bool is_linear_extension(const Tableau& t) {
    return is_linear_extension(t.shape(), t.cells_by_value());
}

// The tableau of p: column index = the round in which a value serves as a
// column, row index = the row of the block maximum it sat under in the
// previous round (values in round 1 keep their column position as row).
inline Tableau build_tableau(const Perm& p) {
    if (!is_primed(p))
        throw std::invalid_argument("build_tableau: permutation must end in its minimum 0");
    const int n = static_cast<int>(p.size()) - 1;
    std::vector<int> col(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> row(static_cast<std::size_t>(n) + 1, 0);

    Perm q(p);
    std::vector<int> prev_columns;       // columns of the previous round
    std::vector<int> prev_block_of(static_cast<std::size_t>(n) + 1, 0);
    int rounds = 0;
    for (int i = 1; !is_sorted_perm(q); ++i, ++rounds) {
        ColumnBlocks cb = detail::split_prefix(detail::prefix_before_zero(q));
        for (std::size_t k = 0; k < cb.columns.size(); ++k) {
            const int v = cb.columns[k];
            col[static_cast<std::size_t>(v)] = i;
            if (i == 1) {
                row[static_cast<std::size_t>(v)] = static_cast<int>(k) + 1;
            } else {
                // v is the maximum of the block it occupied last round.
                const int b = prev_block_of[static_cast<std::size_t>(v)];
                assert(b >= 1);
                const int left = prev_columns[static_cast<std::size_t>(b) - 1];
                row[static_cast<std::size_t>(v)] = row[static_cast<std::size_t>(left)];
            }
        }
        std::fill(prev_block_of.begin(), prev_block_of.end(), 0);
        for (std::size_t k = 0; k < cb.blocks.size(); ++k)
            for (int v : cb.blocks[k])
                prev_block_of[static_cast<std::size_t>(v)] = static_cast<int>(k) + 1;
        prev_columns = std::move(cb.columns);
        q = stack_sort(q);
    }

    const int height = rounds == 0 ? 0 : [&] {
        int h = 0;
        for (int v = 1; v <= n; ++v) h = std::max(h, row[static_cast<std::size_t>(v)]);
        return h;
    }();
    std::vector<int> parts(static_cast<std::size_t>(height), 0);
    for (int v = 1; v <= n; ++v)
        ++parts[static_cast<std::size_t>(row[static_cast<std::size_t>(v)]) - 1];
    std::vector<Cell> cell_of(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v)
        cell_of[static_cast<std::size_t>(v) - 1] = {col[static_cast<std::size_t>(v)], row[static_cast<std::size_t>(v)]};
    return Tableau(Composition(std::move(parts)), std::move(cell_of));
}

} // namespace stacksort
