#pragma once

// Hook lengths on composition diagrams, hook-product counts, exhaustive
// linear-extension enumeration, and the window test recognizing whether a
// given filling is the tableau of a given permutation.

#include <algorithm>
#include <cassert>
#include <functional>
#include <stdexcept>
#include <vector>

#include "bigint.hpp"
#include "composition.hpp"
#include "errors.hpp"
#include "permutation.hpp"
#include "tableau.hpp"

namespace stacksort {

inline constexpr int kDefaultExtensionGuard = 12;   // cells

// Hook of cell (i, j), defined on all of N^2, not just D(shape):
// 1 on the first column, otherwise the cell count of the rows strictly
// between the nearest column-(i-1) cell above and row j, plus
// min(i-1, part(j)).
inline int hook_length(const Composition& shape, int i, int j) {
    if (i < 1 || j < 1) throw std::out_of_range("hook_length: cell indices must be >= 1");
    if (i == 1) return 1;
    const int r0 = comp_upof(shape, i - 1, j).row;
    int h = std::min(i - 1, shape.part(j));
    for (int r = r0 + 1; r < j; ++r) h += shape.part(r);
    return h;
}

inline BigInt hook_product(const Composition& shape) {
    BigInt prod = 1;
    for (int j = 1; j <= shape.length(); ++j)
        for (int i = 1; i <= shape.part(j); ++i)
            prod *= hook_length(shape, i, j);
    return prod;
}

namespace detail {

// Assign values 1..n bottom-up: a cell may take the next value only once
// the cell to its right and the nearest cell below it (its covers from
// beneath) are filled.  Visits each linear extension exactly once.
template <class Fn>
void extensions_rec(const Composition& shape,
                    std::vector<std::vector<int>>& grid,   // [row-1][col-1], 0 = empty
                    std::vector<Cell>& cell_of, int v, int n, Fn& fn) {
    if (v > n) {
        fn(cell_of);
        return;
    }
    for (int j = 1; j <= shape.length(); ++j) {
        for (int i = 1; i <= shape.part(j); ++i) {
            if (grid[static_cast<std::size_t>(j) - 1][static_cast<std::size_t>(i) - 1] != 0) continue;
            if (shape.contains(i + 1, j) &&
                grid[static_cast<std::size_t>(j) - 1][static_cast<std::size_t>(i)] == 0)
                continue;
            bool below_filled = true;
            for (int r = j + 1; r <= shape.length(); ++r) {
                if (!shape.contains(i, r)) continue;
                below_filled = grid[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(i) - 1] != 0;
                break;
            }
            if (!below_filled) continue;
            grid[static_cast<std::size_t>(j) - 1][static_cast<std::size_t>(i) - 1] = v;
            cell_of[static_cast<std::size_t>(v) - 1] = {i, j};
            extensions_rec(shape, grid, cell_of, v + 1, n, fn);
            grid[static_cast<std::size_t>(j) - 1][static_cast<std::size_t>(i) - 1] = 0;
        }
    }
}

} // namespace detail

// Calls fn(cell_of) once per linear extension of D(shape), in a fixed
// deterministic order.  Guarded: diagrams beyond guard_cells are refused.
template <class Fn>
void for_each_linear_extension(const Composition& shape, Fn fn,
                               int guard_cells = kDefaultExtensionGuard) {
    const int n = shape.size();
    if (n > guard_cells)
        throw guard_error("linear-extension enumeration guard exceeded: " +
                          std::to_string(n) + " cells > " + std::to_string(guard_cells));
    std::vector<std::vector<int>> grid(static_cast<std::size_t>(shape.length()));
    for (int j = 1; j <= shape.length(); ++j)
        grid[static_cast<std::size_t>(j) - 1].assign(static_cast<std::size_t>(shape.part(j)), 0);
    std::vector<Cell> cell_of(static_cast<std::size_t>(n));
    detail::extensions_rec(shape, grid, cell_of, 1, n, fn);
}

inline BigInt count_linear_extensions(const Composition& shape,
                                      int guard_cells = kDefaultExtensionGuard) {
    BigInt count = 0;
    for_each_linear_extension(shape, [&](const std::vector<Cell>&) { ++count; }, guard_cells);
    return count;
}

// Number of permutations sharing a given tableau: the hook product of the
// shape, independent of which linear extension T is.
inline BigInt count_for_tableau(const Tableau& t) {
    if (!is_linear_extension(t))
        throw std::invalid_argument("count_for_tableau: filling is not a linear extension");
    return hook_product(t.shape());
}

// Number of permutations whose tableau has the given shape.
inline BigInt count_for_composition(const Composition& shape,
                                    int guard_cells = kDefaultExtensionGuard) {
    return count_linear_extensions(shape, guard_cells) * hook_product(shape);
}

// The candidate segment of the (k-1)-th sorting iterate in which the value
// of cell (i, j) must appear: after the column-k value in the row of
// upof(i-1, j) (from the start if that row is the 0 sentinel), through the
// column-k value in row j inclusive.  Empty if the endpoints are inverted,
// which cannot happen for the permutation's own tableau.
inline Perm window(const Perm& p, const Tableau& t, int i, int j, int k) {
    if (!is_primed(p)) throw std::invalid_argument("window: permutation must end in its minimum 0");
    if (static_cast<int>(p.size()) != t.size() + 1)
        throw std::invalid_argument("window: permutation and tableau sizes disagree");
    const Composition& shape = t.shape();
    if (!shape.contains(i, j)) throw std::out_of_range("window: cell outside the diagram");
    if (k < 1 || k >= i) throw std::out_of_range("window: iterate index must satisfy 1 <= k < i");

    Perm q(p);
    for (int r = 1; r < k; ++r) q = stack_sort(q);

    const int j2 = comp_upof(shape, i - 1, j).row;
    auto pos = [&](int v) {
        auto it = std::find(q.begin(), q.end(), v);
        assert(it != q.end());
        return static_cast<std::size_t>(it - q.begin());
    };
    const std::size_t hi = pos(t.value_at(k, j));
    std::size_t lo = 0;
    if (j2 > 0) lo = pos(t.value_at(k, j2)) + 1;
    Perm out;
    for (std::size_t s = lo; s <= hi; ++s) out.push_back(q[s]);
    return out;
}

// Is t the tableau of p?  Checked without sorting: the first-column values
// must appear in p in row order, and every later-column value must fall in
// its window of the 0th iterate (k = 1).  Assumes t is a linear extension.
inline bool tableau_membership(const Perm& p, const Tableau& t) {
    if (!is_primed(p))
        throw std::invalid_argument("tableau_membership: permutation must end in its minimum 0");
    const int n = t.size();
    if (static_cast<int>(p.size()) != n + 1)
        throw std::invalid_argument("tableau_membership: permutation and tableau sizes disagree");
    const Composition& shape = t.shape();

    std::vector<int> pos(static_cast<std::size_t>(n) + 1, -1);
    for (std::size_t s = 0; s < p.size(); ++s)
        pos[static_cast<std::size_t>(p[s])] = static_cast<int>(s);

    int last = -1;
    for (int j = 1; j <= shape.length(); ++j) {
        const int at = pos[static_cast<std::size_t>(t.value_at(1, j))];
        if (at <= last) return false;
        last = at;
    }
    for (int j = 1; j <= shape.length(); ++j) {
        for (int i = 2; i <= shape.part(j); ++i) {
            const int j2 = comp_upof(shape, i - 1, j).row;
            const int lo = j2 == 0 ? 0 : pos[static_cast<std::size_t>(t.value_at(1, j2))] + 1;
            const int hi = pos[static_cast<std::size_t>(t.value_at(1, j))];
            const int at = pos[static_cast<std::size_t>(t.value_at(i, j))];
            if (at < lo || at > hi) return false;
        }
    }
    return true;
}

} // namespace stacksort
