#pragma once

// Brute-force ground truth: direct iteration over all permutations, census
// of tableaux, exhaustive property verification, and the classical count
// cross-checks (Catalan, the two-pass closed form, Motzkin).

#include <algorithm>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "bigint.hpp"
#include "composition.hpp"
#include "dp.hpp"
#include "errors.hpp"
#include "hooks.hpp"
#include "permutation.hpp"
#include "tableau.hpp"

namespace stacksort {

inline constexpr int kDefaultOracleGuard = 9;

namespace detail {

inline unsigned long long factorial_ull(int n) {
    unsigned long long f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<unsigned long long>(k);
    return f;
}

// rank-th permutation of {1..n} in lexicographic order, rank in [0, n!).
inline Perm nth_permutation(int n, unsigned long long rank) {
    std::vector<int> avail;
    for (int v = 1; v <= n; ++v) avail.push_back(v);
    Perm out;
    for (int left = n; left >= 1; --left) {
        const unsigned long long f = factorial_ull(left - 1);
        const std::size_t d = static_cast<std::size_t>(rank / f);
        rank %= f;
        out.push_back(avail[d]);
        avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(d));
    }
    return out;
}

// Sum fn over all permutations of {1..n}, lexicographic order.  Threading
// splits the order into contiguous rank ranges, so the result is the same
// sum regardless of the thread count.
template <class Fn>
long long sum_over_sn(int n, int threads, Fn fn) {
    const unsigned long long total = factorial_ull(n);
    threads = std::max(1, threads);
    if (threads > 1 && total < 4096) threads = 1;   // not worth splitting
    if (threads == 1) {
        Perm p;
        for (int v = 1; v <= n; ++v) p.push_back(v);
        long long acc = 0;
        do {
            acc += fn(p);
        } while (std::next_permutation(p.begin(), p.end()));
        return acc;
    }
    const unsigned long long chunk = (total + static_cast<unsigned long long>(threads) - 1) /
                                     static_cast<unsigned long long>(threads);
    std::vector<long long> partial(static_cast<std::size_t>(threads), 0);
    std::vector<std::thread> pool;
    for (int th = 0; th < threads; ++th) {
        const unsigned long long start = chunk * static_cast<unsigned long long>(th);
        if (start >= total) break;
        const unsigned long long count = std::min(chunk, total - start);
        pool.emplace_back([n, start, count, th, &partial, fn]() mutable {
            Perm p = nth_permutation(n, start);
            long long acc = 0;
            for (unsigned long long c = 0; c < count; ++c) {
                acc += fn(p);
                std::next_permutation(p.begin(), p.end());
            }
            partial[static_cast<std::size_t>(th)] = acc;
        });
    }
    for (auto& t : pool) t.join();
    long long acc = 0;
    for (long long x : partial) acc += x;
    return acc;
}

inline void check_oracle_guard(int n, int guard, const char* who) {
    if (n > guard)
        throw guard_error(std::string(who) + ": n = " + std::to_string(n) +
                          " exceeds the brute-force guard " + std::to_string(guard));
}

} // namespace detail

// |{p in S'_n : sort_depth(p) <= t}| by direct enumeration.
inline BigInt brute_count(int n, int t, int guard = kDefaultOracleGuard, int threads = 1) {
    detail::check_oracle_guard(n, guard, "brute_count");
    const long long acc = detail::sum_over_sn(n, threads, [t](const Perm& p) -> long long {
        Perm primed(p);
        primed.push_back(0);
        return sort_depth(primed) <= t ? 1 : 0;
    });
    return BigInt(acc);
}

struct CensusEntry {
    Tableau tableau;
    long long permutations = 0;
};

// All of S'_n grouped by tableau; deterministic order (shape, then filling).
inline std::vector<CensusEntry> tableau_census(int n, int guard = kDefaultOracleGuard) {
    detail::check_oracle_guard(n, guard, "tableau_census");
    std::map<Tableau, long long> groups;
    detail::sum_over_sn(n, 1, [&](const Perm& p) -> long long {
        Perm primed(p);
        primed.push_back(0);
        ++groups[build_tableau(primed)];
        return 0;
    });
    std::vector<CensusEntry> out;
    out.reserve(groups.size());
    for (auto& [t, c] : groups) out.push_back({t, c});
    return out;
}

struct ShapeCensusRow {
    Composition shape;
    BigInt extensions;
    BigInt hook_prod;
    BigInt permutations;
};

// Census aggregated per shape, over every composition of n, with the two
// counted factors the totals are supposed to split into.
inline std::vector<ShapeCensusRow> census_by_shape(int n, int guard = kDefaultOracleGuard,
                                                   int extension_guard = kDefaultExtensionGuard) {
    std::vector<CensusEntry> census = tableau_census(n, guard);
    std::vector<ShapeCensusRow> rows;
    for (const Composition& shape : compositions_of(n)) {
        ShapeCensusRow row{shape, count_linear_extensions(shape, extension_guard),
                           hook_product(shape), 0};
        for (const CensusEntry& e : census)
            if (e.tableau.shape() == shape) row.permutations += e.permutations;
        rows.push_back(std::move(row));
    }
    return rows;
}

struct PropertyReport {
    std::string property;
    int n = 0;
    long long checked = 0;
    std::vector<std::string> failures;
};

struct VerifyReport {
    int n = 0;
    std::vector<PropertyReport> properties;

    bool all_pass() const {
        for (const auto& p : properties)
            if (!p.failures.empty()) return false;
        return true;
    }
};

namespace detail {

inline bool is_subsequence(const Perm& needle, const Perm& hay) {
    std::size_t at = 0;
    for (int x : hay)
        if (at < needle.size() && needle[at] == x) ++at;
    return at == needle.size();
}

inline std::vector<Perm> iterates_until_sorted(const Perm& p) {
    std::vector<Perm> out{p};
    while (!is_sorted_perm(out.back())) out.push_back(stack_sort(out.back()));
    return out;
}

struct PropertySink {
    PropertyReport* rep;
    void check(bool ok, const std::string& context) {
        ++rep->checked;
        if (!ok && rep->failures.size() < 50) rep->failures.push_back(context);
        if (!ok && rep->failures.size() == 50) rep->failures.push_back("... (further failures elided)");
    }
};

} // namespace detail

// Exhaustive verification over S'_n (tableau structure, windows, membership)
// and over S_n (tail, subsequence, reduction, decomposition properties).
// Every failure is recorded verbatim; the report passes when all lists stay
// empty.
inline VerifyReport verify_lemmas(int n, int guard = kDefaultOracleGuard) {
    detail::check_oracle_guard(n, guard, "verify_lemmas");
    VerifyReport rep;
    rep.n = n;
    auto& props = rep.properties;
    auto add = [&](const char* name) {
        props.push_back(PropertyReport{name, n, 0, {}});
        return props.size() - 1;
    };
    const std::size_t advance = add("block-advance");
    const std::size_t partition = add("column-partition");
    const std::size_t subseq = add("column-subsequence");
    const std::size_t rowmono = add("row-monotone");
    const std::size_t bijection = add("tableau-bijection");
    const std::size_t order = add("tableau-order-preserving");
    const std::size_t widthdep = add("width-equals-depth");
    const std::size_t nesting = add("window-nesting");
    const std::size_t member = add("membership-agreement");
    const std::size_t tail = add("sorted-tail");
    const std::size_t droplast = add("drop-last-subsequence");
    const std::size_t filter = add("filter-subsequence");
    const std::size_t reduction = add("depth-reduction");
    const std::size_t decomp = add("prefix-decomposition");
    auto sink = [&](std::size_t idx) { return detail::PropertySink{&props[idx]}; };

    // Every (shape, filling) pair of size n, for the membership cross-check.
    std::vector<Tableau> all_fillings;
    for (const Composition& shape : compositions_of(n))
        for_each_linear_extension(
            shape,
            [&](const std::vector<Cell>& cell_of) { all_fillings.emplace_back(shape, cell_of); },
            std::max(n, kDefaultExtensionGuard));

    detail::sum_over_sn(n, 1, [&](const Perm& perm) -> long long {
        Perm p(perm);
        p.push_back(0);
        const std::string ptxt = format_perm(p);
        const std::vector<Perm> iters = detail::iterates_until_sorted(p);
        const int met = static_cast<int>(iters.size()) - 1;

        std::vector<ColumnBlocks> rounds;
        for (int i = 1; i <= met; ++i)
            rounds.push_back(detail::split_prefix(
                detail::prefix_before_zero(iters[static_cast<std::size_t>(i) - 1])));

        // One sorting pass turns the prefix b1 c1 ... bk ck into
        // s(b1) s(b2) ... s(bk) before the 0.
        for (int i = 1; i <= met; ++i) {
            Perm expect;
            for (const Perm& b : rounds[static_cast<std::size_t>(i) - 1].blocks)
                for (int x : stack_sort(b)) expect.push_back(x);
            sink(advance).check(
                detail::prefix_before_zero(iters[static_cast<std::size_t>(i)]) == expect,
                "round " + std::to_string(i) + " of " + ptxt);
        }

        // The columns over all rounds hit each value exactly once.
        {
            std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
            for (const ColumnBlocks& cb : rounds)
                for (int v : cb.columns) ++seen[static_cast<std::size_t>(v)];
            bool ok = true;
            for (int v = 1; v <= n; ++v) ok = ok && seen[static_cast<std::size_t>(v)] == 1;
            sink(partition).check(ok, ptxt);
        }

        // Each round's columns appear, in order, among the previous round's
        // block maxima.
        for (int i = 2; i <= met; ++i) {
            Perm maxima;
            for (const Perm& b : rounds[static_cast<std::size_t>(i) - 2].blocks)
                if (!b.empty()) maxima.push_back(*std::max_element(b.begin(), b.end()));
            sink(subseq).check(
                detail::is_subsequence(rounds[static_cast<std::size_t>(i) - 1].columns, maxima),
                "round " + std::to_string(i) + " of " + ptxt);
        }

        const Tableau t = build_tableau(p);

        // Row indices strictly increase down each round's column list.
        for (int i = 1; i <= met; ++i) {
            const auto& cols = rounds[static_cast<std::size_t>(i) - 1].columns;
            bool ok = true;
            for (std::size_t k = 1; k < cols.size(); ++k)
                ok = ok && t.cell_of(cols[k - 1]).row < t.cell_of(cols[k]).row;
            sink(rowmono).check(ok, "round " + std::to_string(i) + " of " + ptxt);
        }

        // Bijection onto the diagram (construction already threw if not).
        {
            bool ok = t.shape().size() == n;
            std::vector<Cell> cells = t.shape().cells();
            for (int v = 1; v <= n && ok; ++v)
                ok = std::find(cells.begin(), cells.end(), t.cell_of(v)) != cells.end();
            sink(bijection).check(ok, ptxt);
        }

        // Dominance respects values, checked pairwise from the definition.
        {
            bool ok = true;
            for (int a = 1; a <= n && ok; ++a)
                for (int b = 1; b <= n && ok; ++b)
                    if (dominates(t.cell_of(a), t.cell_of(b)) && a < b) ok = false;
            sink(order).check(ok, ptxt);
        }

        sink(widthdep).check(t.shape().width() == met, ptxt);

        // Later-round windows stay inside the round-1 window, and anything
        // the round-1 window has extra sits in a column before round k.
        for (int j = 1; j <= t.shape().length(); ++j) {
            for (int i = 2; i <= t.shape().part(j); ++i) {
                const Perm base = window(p, t, i, j, 1);
                for (int k = 2; k < i; ++k) {
                    const Perm narrow = window(p, t, i, j, k);
                    bool inside = true;
                    for (int v : narrow)
                        inside = inside &&
                                 std::find(base.begin(), base.end(), v) != base.end();
                    bool extra_ok = true;
                    for (int v : base)
                        if (std::find(narrow.begin(), narrow.end(), v) == narrow.end())
                            extra_ok = extra_ok && t.cell_of(v).col < k;
                    sink(nesting).check(inside && extra_ok,
                                        "cell (" + std::to_string(i) + "," + std::to_string(j) +
                                            ") k=" + std::to_string(k) + " of " + ptxt);
                }
            }
        }

        // The window test recognizes exactly the permutation's own tableau.
        for (const Tableau& cand : all_fillings)
            sink(member).check(tableau_membership(p, cand) == (cand == t),
                               "candidate shape " + format_composition(cand.shape()) +
                                   " vs " + ptxt);
        return 0;
    });

    detail::sum_over_sn(n, 1, [&](const Perm& p) -> long long {
        if (p.empty()) return 0;   // every property below is vacuous
        const std::string ptxt = format_perm(p);
        const int last = p.back();
        std::vector<Perm> iters{p};
        for (int k = 1; k < n; ++k) iters.push_back(stack_sort(iters.back()));

        // Entries right of the original last entry: sorted, all larger.
        for (int k = 0; k < n; ++k) {
            const Perm& q = iters[static_cast<std::size_t>(k)];
            const auto at = std::find(q.begin(), q.end(), last);
            Perm suffix(at + 1, q.end());
            sink(tail).check(is_sorted_perm(suffix) &&
                                 std::all_of(suffix.begin(), suffix.end(),
                                             [&](int v) { return v > last; }),
                             "k=" + std::to_string(k) + " of " + ptxt);
        }

        // Dropping the last entry commutes with sorting, as a subsequence.
        {
            Perm head(p.begin(), p.end() - 1);
            Perm hq(head);
            for (int k = 0; k < n; ++k) {
                sink(droplast).check(
                    detail::is_subsequence(hq, iters[static_cast<std::size_t>(k)]),
                    "k=" + std::to_string(k) + " of " + ptxt);
                hq = stack_sort(hq);
            }
        }

        // So does restricting to values >= m.
        for (int m = 1; m <= n; ++m) {
            Perm fq = filter_ge(p, m);
            for (int k = 0; k < n; ++k) {
                sink(filter).check(
                    detail::is_subsequence(fq, iters[static_cast<std::size_t>(k)]),
                    "m=" + std::to_string(m) + " k=" + std::to_string(k) + " of " + ptxt);
                fq = stack_sort(fq);
            }
        }

        // Depth splits over (all but last, values >= last).
        if (n >= 1) {
            Perm head(p.begin(), p.end() - 1);
            sink(reduction).check(sort_depth(p) == std::max(sort_depth(head),
                                                            sort_depth(filter_ge(p, last))),
                                  ptxt);
        }

        sink(decomp).check(sort_depth_decomposed(p) == sort_depth(p), ptxt);
        return 0;
    });

    return rep;
}

struct ClassicCounts {
    BigInt one_pass_brute;    // |W_1(n)| counted directly
    BigInt catalan;           // binom(2n,n)/(n+1)
    BigInt two_pass_brute;    // |W_2(n)| counted directly
    BigInt zeilberger;        // 2 binom(3n,n)/((n+1)(2n+1))
};

inline BigInt catalan_number(int n) {
    if (n < 0) throw std::invalid_argument("catalan_number: n must be >= 0");
    return binomial(2 * n, n) / (n + 1);
}

inline BigInt zeilberger_count(int n) {
    if (n < 1) throw std::invalid_argument("zeilberger_count: n must be >= 1");
    const BigInt num = 2 * binomial(3 * n, n);
    const BigInt den = BigInt(n + 1) * (2 * n + 1);
    return num / den;
}

// Brute-force one- and two-pass counts over unrestricted S_n next to their
// closed forms.  Closed forms are exact integer arithmetic throughout.
inline ClassicCounts classic_counts(int n, int guard = kDefaultOracleGuard, int threads = 1) {
    if (n < 1) throw std::invalid_argument("classic_counts: n must be >= 1");
    detail::check_oracle_guard(n, guard, "classic_counts");
    // Both counts in one pass, packed into disjoint 32-bit halves; each
    // count stays below 2^32 under the guard, so the halves never carry.
    const long long both = detail::sum_over_sn(n, threads, [](const Perm& p) -> long long {
        const int d = sort_depth(p);
        return (d <= 1 ? 1LL : 0LL) + ((d <= 2 ? 1LL : 0LL) << 32);
    });
    const long long one = both & 0xFFFFFFFFLL;
    const long long two = both >> 32;
    return {BigInt(one), catalan_number(n), BigInt(two), zeilberger_count(n)};
}

inline BigInt motzkin_number(int n) {
    if (n < 0) throw std::invalid_argument("motzkin_number: n must be >= 0");
    std::vector<BigInt> m(static_cast<std::size_t>(n) + 1);
    m[0] = 1;
    for (int k = 1; k <= n; ++k) {
        BigInt v = m[static_cast<std::size_t>(k) - 1];
        for (int j = 0; j <= k - 2; ++j)
            v += m[static_cast<std::size_t>(j)] * m[static_cast<std::size_t>(k - 2 - j)];
        m[static_cast<std::size_t>(k)] = v;
    }
    return m[static_cast<std::size_t>(n)];
}

} // namespace stacksort
