#pragma once

// Presentation layer shared by the CLI and the tests: trace lines with
// block/column annotation, tableau grids in English notation (top row
// first), and the JSON/CSV forms of tableaux, count tables, censuses, and
// verification reports.  All numbers render as exact decimal strings.

#include <json.hpp>

#include <string>
#include <vector>

#include "bigint.hpp"
#include "composition.hpp"
#include "dp.hpp"
#include "oracle.hpp"
#include "permutation.hpp"
#include "tableau.hpp"

namespace stacksort {

using nlohmann::json;

// One line per sorting pass, ending with the sorted iterate.  Sequences
// ending in 0 get their blocks parenthesized and columns bare, e.g.
// "(9 3) 10 (7) 8 (2) 6 (1 4) 5 0 ..."; empty blocks are not shown.
inline std::vector<std::string> trace_lines(const Perm& p) {
    const bool annotate = is_primed(p);
    std::vector<std::string> out;
    Perm q(p);
    while (true) {
        if (annotate && !is_sorted_perm(q)) {
            const ColumnBlocks cb = detail::split_prefix(detail::prefix_before_zero(q));
            std::string line;
            for (std::size_t k = 0; k < cb.columns.size(); ++k) {
                if (!cb.blocks[k].empty())
                    line += "(" + format_perm(cb.blocks[k]) + ") ";
                line += std::to_string(cb.columns[k]) + " ";
            }
            line += "0";
            std::size_t zero_at = 0;
            while (q[zero_at] != 0) ++zero_at;
            for (std::size_t s = zero_at + 1; s < q.size(); ++s)
                line += " " + std::to_string(q[s]);
            out.push_back(std::move(line));
        } else {
            out.push_back(format_perm(q));
        }
        if (is_sorted_perm(q)) break;
        q = stack_sort(q);
    }
    return out;
}

inline json trace_to_json(const Perm& p) {
    json j;
    j["input"] = p;
    json lines = json::array();
    Perm q(p);
    while (true) {
        lines.push_back(q);
        if (is_sorted_perm(q)) break;
        q = stack_sort(q);
    }
    j["iterates"] = std::move(lines);
    if (is_primed(p)) {
        json rounds = json::array();
        const int met = static_cast<int>(j["iterates"].size()) - 1;
        for (int i = 1; i <= met; ++i) {
            const ColumnBlocks cb = column_blocks(p, i);
            rounds.push_back({{"round", i}, {"columns", cb.columns}, {"blocks", cb.blocks}});
        }
        j["rounds"] = std::move(rounds);
    }
    return j;
}

// Rows top to bottom, entries left to right: "10 9 3", "8 7", "6", ...
inline std::vector<std::string> tableau_grid_lines(const Tableau& t) {
    std::vector<std::string> out;
    for (int j = 1; j <= t.shape().length(); ++j) {
        std::string line;
        for (int i = 1; i <= t.shape().part(j); ++i) {
            if (i > 1) line += ' ';
            line += std::to_string(t.value_at(i, j));
        }
        out.push_back(std::move(line));
    }
    return out;
}

inline json tableau_to_json(const Tableau& t) {
    json j;
    j["shape"] = t.shape().parts();
    json cells = json::object();
    for (int v = 1; v <= t.size(); ++v) {
        const Cell c = t.cell_of(v);
        cells[std::to_string(v)] = {c.col, c.row};
    }
    j["cells"] = std::move(cells);
    return j;
}

inline Tableau tableau_from_json(const json& j) {
    Composition shape(j.at("shape").get<std::vector<int>>());
    std::vector<Cell> cell_of(static_cast<std::size_t>(shape.size()));
    for (int v = 1; v <= shape.size(); ++v) {
        const auto& c = j.at("cells").at(std::to_string(v));
        cell_of[static_cast<std::size_t>(v) - 1] = {c.at(0).get<int>(), c.at(1).get<int>()};
    }
    return Tableau(std::move(shape), std::move(cell_of));
}

inline json counts_to_json(int t, const std::vector<std::pair<int, BigInt>>& rows) {
    json j;
    j["t"] = t;
    json out = json::array();
    for (const auto& [n, count] : rows)
        out.push_back({{"n", n}, {"count", to_decimal(count)}});
    j["rows"] = std::move(out);
    return j;
}

inline std::string counts_to_csv(const std::vector<std::pair<int, BigInt>>& rows) {
    std::string out = "n,count\n";
    for (const auto& [n, count] : rows)
        out += std::to_string(n) + "," + to_decimal(count) + "\n";
    return out;
}

inline json census_to_json(const std::vector<ShapeCensusRow>& rows) {
    json out = json::array();
    for (const ShapeCensusRow& r : rows)
        out.push_back({{"shape", r.shape.parts()},
                       {"extensions", to_decimal(r.extensions)},
                       {"hook_product", to_decimal(r.hook_prod)},
                       {"count", to_decimal(r.permutations)}});
    return out;
}

inline json report_to_json(const VerifyReport& rep) {
    json props = json::array();
    for (const PropertyReport& p : rep.properties)
        props.push_back({{"property", p.property},
                         {"n", p.n},
                         {"checked", p.checked},
                         {"failures", p.failures}});
    return json{{"n", rep.n}, {"all_pass", rep.all_pass()}, {"properties", std::move(props)}};
}

} // namespace stacksort
