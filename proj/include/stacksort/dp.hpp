#pragma once

// Forward dynamic program counting permutations ending in 0 that sort
// within t passes.  Such permutations correspond to (shape, extension)
// pairs whose diagram width is at most t, and each pair accounts for
// hook_product(shape) of them, so the DP builds shapes row by row and
// carries just enough of the filling to continue:
//
//   placed    cells so far (the layer index)
//   width     widest row so far
//   last_row  length of the bottom row
//   hooks     hooks[j-1] = hook of cell (j+1, bottom row), j = 1..width
//   bottoms   bottoms[j-1] = label of the bottom cell of column j, i.e.
//             the column minimum, with labels renumbered to 1..placed
//
// Appending a row of length i multiplies the running count by the hooks of
// the new row's cells 2..i (its first cell has hook 1) and branches over
// the admissible label tuples for the new row.  States that agree on
// (width, last_row, hooks, bottoms) merge, which is what keeps the layer
// maps small.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"

namespace stacksort {

struct DpState {
    int placed = 0;
    int width = 0;
    int last_row = 0;
    std::vector<int> hooks;
    std::vector<int> bottoms;

    friend bool operator==(const DpState& a, const DpState& b) {
        return a.placed == b.placed && a.width == b.width && a.last_row == b.last_row &&
               a.hooks == b.hooks && a.bottoms == b.bottoms;
    }
};

inline DpState initial_dp_state() { return {}; }

// Hooks of the would-be bottom row cells after appending a row of length i:
// entry j covers cell (j+1, new bottom row) of the extended shape, for
// j = 1..max(width, i).
namespace detail {

inline void fill_extend_hooks(int placed, int width, int last_row,
                              const std::vector<int>& hooks, int i, std::vector<int>& h2) {
    const int w2 = std::max(width, i);
    h2.resize(static_cast<std::size_t>(w2));
    for (int j = 1; j <= w2; ++j) {
        if (j <= last_row)
            h2[static_cast<std::size_t>(j) - 1] = std::min(j, i);
        else if (j <= width)
            h2[static_cast<std::size_t>(j) - 1] = hooks[static_cast<std::size_t>(j) - 1] + std::min(j, i);
        else
            h2[static_cast<std::size_t>(j) - 1] = placed + j;
    }
}

} // namespace detail

inline std::vector<int> extend_hooks(const DpState& s, int i) {
    if (i < 1) throw std::out_of_range("extend_hooks: row length must be >= 1");
    std::vector<int> h2;
    detail::fill_extend_hooks(s.placed, s.width, s.last_row, s.hooks, i, h2);
    return h2;
}

namespace detail {

// Enumerate the admissible label tuples after appending a row of length i.
// Entries 1..i are the new row's labels in the relabeled range [placed+i],
// strictly decreasing; for j <= min(width, i) the new label must slot in
// strictly below the old column-j minimum, which in final labels reads
// pos_j <= bottoms[j-1] + i - j (the old label gets shifted past exactly
// the new labels beneath it).  Surviving columns j > i keep their old
// minimum, relabeled to bottoms[j-1] + #{k : pos_k <= bottoms[j-1] + i - k}.
template <class Fn>
void for_each_position(int placed, int width, const std::vector<int>& bottoms, int i,
                       std::vector<int>& pos, Fn&& fn) {
    const int w2 = std::max(width, i);
    pos.assign(static_cast<std::size_t>(w2), 0);
    auto rec = [&](auto&& self, int j) -> void {
        if (j > i) {
            for (int c = i + 1; c <= width; ++c) {
                const int base = bottoms[static_cast<std::size_t>(c) - 1];
                int cnt = 0;
                for (int k = 1; k <= i; ++k)
                    if (pos[static_cast<std::size_t>(k) - 1] <= base + i - k) ++cnt;
                pos[static_cast<std::size_t>(c) - 1] = base + cnt;
                assert(base + cnt <= placed + i);
            }
            fn(pos);
            return;
        }
        int ub = j == 1 ? placed + i : pos[static_cast<std::size_t>(j) - 2] - 1;
        if (j <= std::min(width, i))
            ub = std::min(ub, bottoms[static_cast<std::size_t>(j) - 1] + i - j);
        for (int q = ub; q >= i - j + 1; --q) {
            pos[static_cast<std::size_t>(j) - 1] = q;
            self(self, j + 1);
        }
    };
    rec(rec, 1);
}

} // namespace detail

// All admissible label tuples, descending lexicographic order.
inline std::vector<std::vector<int>> enumerate_positions(const DpState& s, int i) {
    if (i < 1) throw std::out_of_range("enumerate_positions: row length must be >= 1");
    std::vector<std::vector<int>> out;
    std::vector<int> pos;
    detail::for_each_position(s.placed, s.width, s.bottoms, i, pos,
                              [&](const std::vector<int>& q) { out.push_back(q); });
    return out;
}

struct DpSuccessor {
    DpState state;
    BigInt multiplier;
};

// Every state reachable by appending one row of length 1..t, with the
// count multiplier contributed by the new row's hooks.
inline std::vector<DpSuccessor> successors(const DpState& s, int t) {
    std::vector<DpSuccessor> out;
    std::vector<int> pos;
    for (int i = 1; i <= t; ++i) {
        std::vector<int> h2 = extend_hooks(s, i);
        BigInt mult = 1;
        for (int j = 1; j < i; ++j) mult *= h2[static_cast<std::size_t>(j) - 1];
        detail::for_each_position(s.placed, s.width, s.bottoms, i, pos,
                                  [&](const std::vector<int>& q) {
                                      out.push_back({DpState{s.placed + i, std::max(s.width, i),
                                                             i, h2, q},
                                                     mult});
                                  });
    }
    return out;
}

namespace detail {

using DpKey = unsigned __int128;

struct DpKeyHash {
    std::size_t operator()(DpKey k) const {
        std::uint64_t x = static_cast<std::uint64_t>(k) ^
                          (static_cast<std::uint64_t>(k >> 64) * 0x9E3779B97F4A7C15ULL);
        x ^= x >> 30;
        x *= 0xBF58476D1CE4E5B9ULL;
        x ^= x >> 27;
        x *= 0x94D049BB133111EBULL;
        x ^= x >> 31;
        return static_cast<std::size_t>(x);
    }
};

inline int bits_for(int max_value) {
    int b = 1;
    while ((1 << b) <= max_value) ++b;
    return b;
}

// (width, last_row, hooks, bottoms) packed little-end first so width can be
// peeled off before the digit count is known.
inline DpKey encode_state(int bits, int width, int last_row,
                          const std::vector<int>& hooks, const std::vector<int>& bottoms) {
    DpKey k = 0;
    for (int j = width; j >= 1; --j)
        k = (k << bits) | static_cast<unsigned>(bottoms[static_cast<std::size_t>(j) - 1]);
    for (int j = width; j >= 1; --j)
        k = (k << bits) | static_cast<unsigned>(hooks[static_cast<std::size_t>(j) - 1]);
    k = (k << bits) | static_cast<unsigned>(last_row);
    k = (k << bits) | static_cast<unsigned>(width);
    return k;
}

inline void decode_state(int bits, DpKey k, int& width, int& last_row,
                         std::vector<int>& hooks, std::vector<int>& bottoms) {
    const DpKey mask = (DpKey{1} << bits) - 1;
    width = static_cast<int>(k & mask);
    k >>= bits;
    last_row = static_cast<int>(k & mask);
    k >>= bits;
    hooks.resize(static_cast<std::size_t>(width));
    bottoms.resize(static_cast<std::size_t>(width));
    for (int j = 1; j <= width; ++j, k >>= bits)
        hooks[static_cast<std::size_t>(j) - 1] = static_cast<int>(k & mask);
    for (int j = 1; j <= width; ++j, k >>= bits)
        bottoms[static_cast<std::size_t>(j) - 1] = static_cast<int>(k & mask);
}

} // namespace detail

namespace detail {

// One forward sweep; entry n of the result is the count for permutations
// of size n.  Layer m is complete before it is expanded because every
// transition strictly increases m.
inline std::vector<BigInt> dp_layer_sums(int n_max, int t) {
    if (n_max < 0 || t < 0)
        throw std::invalid_argument("dp: n and t must be >= 0");
    const int teff = std::min(t, n_max);   // longer rows would overshoot n_max
    const int bits = bits_for(std::max(n_max, 1));
    const int fields = 2 + 2 * teff;
    if (bits * fields > 128)
        throw guard_error("dp: state does not fit the 128-bit key (n and t too large together)");

    using Layer = std::unordered_map<DpKey, BigInt, DpKeyHash>;
    std::vector<Layer> layers(static_cast<std::size_t>(n_max) + 1);
    layers[0].emplace(encode_state(bits, 0, 0, {}, {}), 1);

    std::vector<BigInt> sums(static_cast<std::size_t>(n_max) + 1);
    std::vector<int> hooks, bottoms, h2, pos;
    for (int m = 0; m <= n_max; ++m) {
        Layer& layer = layers[static_cast<std::size_t>(m)];
        for (const auto& [key, val] : layer) sums[static_cast<std::size_t>(m)] += val;
        if (m == n_max) break;
        for (const auto& [key, val] : layer) {
            int width = 0, last_row = 0;
            decode_state(bits, key, width, last_row, hooks, bottoms);
            for (int i = 1; i <= std::min(teff, n_max - m); ++i) {
                const int w2 = std::max(width, i);
                fill_extend_hooks(m, width, last_row, hooks, i, h2);
                BigInt contrib = val;
                for (int j = 1; j < i; ++j) contrib *= h2[static_cast<std::size_t>(j) - 1];
                Layer& target = layers[static_cast<std::size_t>(m + i)];
                for_each_position(m, width, bottoms, i, pos,
                                  [&](const std::vector<int>& q) {
                                      target[encode_state(bits, w2, i, h2, q)] += contrib;
                                  });
            }
        }
        Layer().swap(layer);   // the layer never gets read again
    }
    return sums;
}

} // namespace detail

// |{p of size n ending in 0 : sort_depth(p) <= t}|.
inline BigInt count_sortable(int n, int t) {
    return detail::dp_layer_sums(n, t)[static_cast<std::size_t>(n)];
}

// Counts for n = 1..n_max out of a single sweep.
inline std::vector<std::pair<int, BigInt>> count_table(int n_max, int t) {
    std::vector<BigInt> sums = detail::dp_layer_sums(n_max, t);
    std::vector<std::pair<int, BigInt>> rows;
    rows.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n)
        rows.emplace_back(n, std::move(sums[static_cast<std::size_t>(n)]));
    return rows;
}

} // namespace stacksort
