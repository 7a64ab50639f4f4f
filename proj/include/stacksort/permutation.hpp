#pragma once

// Stack-sorting on sequences of distinct non-negative integers.
//
// A "permutation" here is any sequence of pairwise distinct values, not
// necessarily 1..n.  One pass of the sorting map runs the sequence through
// a single stack: while the incoming entry is larger than the top of the
// stack, pop to the output; then push.  Flushing the stack at the end keeps
// it increasing top to bottom throughout.

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stacksort {

using Perm = std::vector<int>;

namespace detail {

inline void require_distinct(const Perm& p) {
    Perm s(p);
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument("permutation entries must be distinct");
    if (!s.empty() && s.front() < 0)
        throw std::invalid_argument("permutation entries must be non-negative");
}

} // namespace detail

// Strictly increasing?
inline bool is_sorted_perm(const Perm& p) {
    return std::is_sorted(p.begin(), p.end()) &&
           std::adjacent_find(p.begin(), p.end()) == p.end();
}

// One pass of the stack-sorting map.
inline Perm stack_sort(const Perm& p) {
    detail::require_distinct(p);
    Perm out;
    out.reserve(p.size());
    std::vector<int> st;
    for (int x : p) {
        while (!st.empty() && st.back() < x) {
            out.push_back(st.back());
            st.pop_back();
        }
        st.push_back(x);
    }
    while (!st.empty()) {
        out.push_back(st.back());
        st.pop_back();
    }
    return out;
}

// Least k with the k-th iterate sorted.  Always <= |p| - 1 for |p| >= 1.
inline int sort_depth(const Perm& p) {
    detail::require_distinct(p);
    Perm cur(p);
    int k = 0;
    while (!is_sorted_perm(cur)) {
        cur = stack_sort(cur);
        ++k;
    }
    return k;
}

// Entries {0,...,n} with the 0 at the end: the shape-restricted class the
// counting routines work over.
inline bool is_primed(const Perm& p) {
    if (p.empty() || p.back() != 0) return false;
    std::vector<char> seen(p.size(), 0);
    for (int x : p) {
        if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

// Replace the i-th smallest entry by i - 1.  Relative order is preserved,
// and every stack-sorting statistic is invariant under this relabeling.
inline Perm standardize(const Perm& p) {
    detail::require_distinct(p);
    std::vector<int> order(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return p[a] < p[b]; });
    Perm out(p.size());
    for (std::size_t r = 0; r < order.size(); ++r)
        out[order[r]] = static_cast<int>(r);
    return out;
}

// Subsequence of entries >= m, order kept.
inline Perm filter_ge(const Perm& p, int m) {
    Perm out;
    for (int x : p)
        if (x >= m) out.push_back(x);
    return out;
}

// First i entries (1-based i), restricted to values >= the i-th entry.
inline Perm prefix_filter(const Perm& p, int i) {
    if (i < 1 || i > static_cast<int>(p.size()))
        throw std::out_of_range("prefix_filter: index out of range");
    int pivot = p[static_cast<std::size_t>(i) - 1];
    Perm out;
    for (int k = 0; k < i; ++k)
        if (p[static_cast<std::size_t>(k)] >= pivot) out.push_back(p[static_cast<std::size_t>(k)]);
    return out;
}

// Sorting depth via the prefix decomposition: the depth of p equals the
// largest depth among the filtered prefixes ending at each position.
inline int sort_depth_decomposed(const Perm& p) {
    detail::require_distinct(p);
    int best = 0;
    for (int i = 1; i <= static_cast<int>(p.size()); ++i)
        best = std::max(best, sort_depth(prefix_filter(p, i)));
    return best;
}

// Text form: whitespace- or comma-separated decimal entries.
inline Perm parse_perm(std::string_view text) {
    Perm out;
    std::string tok;
    auto flush = [&]() {
        if (tok.empty()) return;
        for (char c : tok)
            if (c < '0' || c > '9')
                throw std::invalid_argument("bad permutation entry: " + tok);
        if (tok.size() > 9)
            throw std::invalid_argument("permutation entry too large: " + tok);
        out.push_back(std::stoi(tok));
        tok.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r')
            flush();
        else
            tok.push_back(c);
    }
    flush();
    detail::require_distinct(out);
    return out;
}

inline std::string format_perm(const Perm& p) {
    std::ostringstream os;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << ' ';
        os << p[i];
    }
    return os.str();
}

} // namespace stacksort
