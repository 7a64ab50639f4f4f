#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "test_util.hpp"

using namespace stacksort;

namespace {

const Perm kExample{9, 3, 10, 7, 8, 2, 6, 1, 4, 5, 0};

} // namespace

TEST_CASE("hook lengths of the example shape") {
    const Composition a({3, 2, 1, 4});
    const std::vector<std::vector<int>> want{{1, 1, 2}, {1, 1}, {1}, {1, 1, 3, 6}};
    for (int j = 1; j <= a.length(); ++j)
        for (int i = 1; i <= a.part(j); ++i)
            CHECK(hook_length(a, i, j) ==
                  want[static_cast<std::size_t>(j) - 1][static_cast<std::size_t>(i) - 1]);
    CHECK(hook_length(a, 3, 1) == 2);
    CHECK(hook_length(a, 2, 2) == 1);
    CHECK(hook_length(a, 4, 4) == 6);
    CHECK(hook_length(a, 3, 4) == 3);
    CHECK(hook_length(a, 2, 4) == 1);
}

TEST_CASE("hook lengths outside the diagram") {
    const Composition a({2});
    CHECK(hook_length(a, 3, 1) == 2);
    CHECK(hook_length(a, 1, 5) == 1);
    CHECK(hook_length(a, 2, 2) == 0);   // nothing between row 1 and row 2
    CHECK(hook_length(a, 4, 2) == 2);   // row 1 lies strictly between
}

TEST_CASE("hook length equals the cardinality of the hook set") {
    for (int n = 1; n <= 10; ++n)
        for (const Composition& shape : compositions_of(n))
            for (int j = 1; j <= shape.length() + 1; ++j)
                for (int i = 1; i <= shape.size() + 1; ++i)
                    REQUIRE(hook_length(shape, i, j) == testutil::counted_hook(shape, i, j));
}

TEST_CASE("hook products") {
    CHECK(hook_product(Composition({3, 2, 1, 4})) == 36);
    CHECK(hook_product(Composition({5})) == 24);          // (n-1)! for a single row
    CHECK(hook_product(Composition({1, 1, 1})) == 1);
    CHECK(hook_product(Composition()) == 1);
}

TEST_CASE("linear extension counts of small shapes") {
    CHECK(count_linear_extensions(Composition({2})) == 1);
    CHECK(count_linear_extensions(Composition({1, 1})) == 1);
    CHECK(count_linear_extensions(Composition({2, 1})) == 2);
    CHECK(count_linear_extensions(Composition({2, 2})) == 2);
    CHECK(count_linear_extensions(Composition({1, 1, 1})) == 1);
    CHECK(count_linear_extensions(Composition()) == 1);
}

TEST_CASE("extension enumeration agrees with filtering all fillings") {
    for (int n = 1; n <= 5; ++n) {
        for (const Composition& shape : compositions_of(n)) {
            long long direct = 0;
            const std::vector<Cell> cells = shape.cells();
            std::vector<int> idx(cells.size());
            std::iota(idx.begin(), idx.end(), 0);
            do {
                std::vector<Cell> cell_of(cells.size());
                for (std::size_t v = 0; v < cells.size(); ++v)
                    cell_of[v] = cells[static_cast<std::size_t>(idx[v])];
                if (is_linear_extension(shape, cell_of)) ++direct;
            } while (std::next_permutation(idx.begin(), idx.end()));
            REQUIRE(count_linear_extensions(shape) == direct);

            // The callback sees each extension exactly once, no repeats.
            std::set<std::vector<Cell>> seen;
            for_each_linear_extension(shape, [&](const std::vector<Cell>& cell_of) {
                REQUIRE(is_linear_extension(shape, cell_of));
                REQUIRE(seen.insert(cell_of).second);
            });
            REQUIRE(static_cast<long long>(seen.size()) == direct);
        }
    }
}

TEST_CASE("extension enumeration guard") {
    const Composition big({7, 6});   // 13 cells
    CHECK_THROWS_AS(count_linear_extensions(big), guard_error);
    CHECK_NOTHROW(count_linear_extensions(Composition({7, 5})));
    CHECK(count_linear_extensions(big, 13) > 0);
}

TEST_CASE("permutation counts attached to tableaux and shapes") {
    const Tableau t = build_tableau(kExample);
    CHECK(count_for_tableau(t) == 36);

    std::vector<Cell> cells = t.cells_by_value();
    std::swap(cells[0], cells[9]);
    CHECK_THROWS_AS(count_for_tableau(Tableau(t.shape(), cells)), std::invalid_argument);

    CHECK(count_for_composition(Composition({1, 1, 1, 1})) == 1);

    // Shape counts over all compositions of n add up to n! .
    for (int n = 0; n <= 7; ++n) {
        BigInt total = 0;
        for (const Composition& shape : compositions_of(n))
            total += count_for_composition(shape);
        REQUIRE(total == factorial(n));
    }
}

TEST_CASE("windows of the running example") {
    const Tableau t = build_tableau(kExample);
    CHECK(window(kExample, t, 2, 4, 1) == Perm{1, 4, 5});
    CHECK(window(kExample, t, 2, 1, 1) == Perm{9, 3, 10});
    CHECK(window(kExample, t, 3, 4, 1) == Perm{2, 6, 1, 4, 5});
    CHECK(window(kExample, t, 3, 4, 2) == Perm{2, 1, 4});

    CHECK_THROWS_AS(window(kExample, t, 2, 4, 2), std::out_of_range);   // needs k < i
    CHECK_THROWS_AS(window(kExample, t, 1, 1, 1), std::out_of_range);
    CHECK_THROWS_AS(window(kExample, t, 4, 1, 1), std::out_of_range);   // outside the shape
    CHECK_THROWS_AS(window({2, 1, 3}, t, 2, 4, 1), std::invalid_argument);
}

TEST_CASE("later windows only shed small-column values") {
    // Within a cell's windows, going one pass deeper never adds entries and
    // only removes values whose own column index is below the pass index.
    for (int n = 1; n <= 6; ++n)
        testutil::for_all_primed(n, [&](const Perm& p) {
            const Tableau t = build_tableau(p);
            const Composition& shape = t.shape();
            for (int j = 1; j <= shape.length(); ++j)
                for (int i = 2; i <= shape.part(j); ++i) {
                    const Perm w1 = window(p, t, i, j, 1);
                    for (int k = 2; k < i; ++k) {
                        const Perm wk = window(p, t, i, j, k);
                        for (int v : wk)
                            REQUIRE(std::find(w1.begin(), w1.end(), v) != w1.end());
                        for (int v : w1)
                            if (std::find(wk.begin(), wk.end(), v) == wk.end())
                                REQUIRE(t.cell_of(v).col < k);
                    }
                }
        });
}

TEST_CASE("membership test recognizes exactly the permutation's tableau") {
    const Tableau t = build_tableau(kExample);
    CHECK(tableau_membership(kExample, t));

    // Another linear extension of the same shape is not the tableau of p.
    std::vector<Cell> cells = t.cells_by_value();
    std::swap(cells[8], cells[7]);   // 9 <-> 8: stays an extension
    const Tableau other(t.shape(), cells);
    REQUIRE(is_linear_extension(other));
    CHECK_FALSE(tableau_membership(kExample, other));

    CHECK_THROWS_AS(tableau_membership({2, 1, 3}, t), std::invalid_argument);
    CHECK_THROWS_AS(tableau_membership({1, 0}, t), std::invalid_argument);
}
