#pragma once

// Compositions drawn as left-justified cell diagrams, one row per part,
// rows indexed top to bottom and columns left to right (both 1-based).
// D(a) = { (i,j) : 1 <= j <= #parts, 1 <= i <= part j }, cells addressed
// as (column, row).
//
// Cells are ordered by the dominance partial order: (x,y) >= (z,w) iff
// x <= z and y <= w, so (1,1) is the unique maximal cell.

#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stacksort {

struct Cell {
    int col = 0;
    int row = 0;

    friend bool operator==(const Cell& a, const Cell& b) {
        return a.col == b.col && a.row == b.row;
    }
    friend bool operator!=(const Cell& a, const Cell& b) { return !(a == b); }
    friend bool operator<(const Cell& a, const Cell& b) {
        return a.col != b.col ? a.col < b.col : a.row < b.row;
    }
};

// a >= b in dominance order.
inline bool dominates(const Cell& a, const Cell& b) {
    return a.col <= b.col && a.row <= b.row;
}

class Composition {
public:
    Composition() = default;

    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 1) throw std::invalid_argument("composition parts must be >= 1");
    }

    // Number of cells.
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    // Number of parts (rows).
    int length() const { return static_cast<int>(parts_.size()); }

    // Largest part.
    int width() const {
        int w = 0;
        for (int p : parts_) w = std::max(w, p);
        return w;
    }

    // 1-based part access; rows beyond the last have length 0.
    int part(int j) const {
        return (j >= 1 && j <= length()) ? parts_[static_cast<std::size_t>(j) - 1] : 0;
    }

    const std::vector<int>& parts() const { return parts_; }

    bool contains(int i, int j) const { return i >= 1 && j >= 1 && i <= part(j); }
    bool contains(const Cell& c) const { return contains(c.col, c.row); }

    // Row-major enumeration of D.
    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int j = 1; j <= length(); ++j)
            for (int i = 1; i <= part(j); ++i)
                out.push_back({i, j});
        return out;
    }

    Composition appended(int new_part) const {
        std::vector<int> q(parts_);
        q.push_back(new_part);
        return Composition(std::move(q));
    }

    friend bool operator==(const Composition& a, const Composition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const Composition& a, const Composition& b) { return !(a == b); }
    friend bool operator<(const Composition& a, const Composition& b) {
        return a.parts_ < b.parts_;
    }

private:
    std::vector<int> parts_;
};

// Text form: comma-separated parts, e.g. "3,2,1,4".  Empty string is the
// empty composition.
inline Composition parse_composition(std::string_view text) {
    std::vector<int> parts;
    std::string tok;
    auto flush = [&]() {
        if (tok.empty()) throw std::invalid_argument("empty composition part");
        for (char c : tok)
            if (c < '0' || c > '9')
                throw std::invalid_argument("bad composition part: " + tok);
        if (tok.size() > 9) throw std::invalid_argument("composition part too large");
        parts.push_back(std::stoi(tok));
        tok.clear();
    };
    bool any = false;
    for (char c : text) {
        if (c == ' ' || c == '\t') continue;
        any = true;
        if (c == ',')
            flush();
        else
            tok.push_back(c);
    }
    if (any) flush();
    return Composition(std::move(parts));
}

inline std::string format_composition(const Composition& a) {
    std::string out;
    for (int j = 1; j <= a.length(); ++j) {
        if (j > 1) out += ',';
        out += std::to_string(a.part(j));
    }
    return out;
}

// All compositions of n, in lexicographic order of part vectors.
inline std::vector<Composition> compositions_of(int n) {
    if (n < 0) throw std::invalid_argument("compositions_of: n must be >= 0");
    std::vector<Composition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = 1; p <= rest; ++p) {
            cur.push_back(p);
            self(self, rest - p);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

// Nearest present cell straight above (falling back to the row-0 sentinel):
// upof(a, i, j) = (i, j') with j' the largest row < j holding a cell in
// column i, or (i, 0) if there is none.  (i, j) itself need not be in D.
inline Cell comp_upof(const Composition& a, int i, int j) {
    if (i < 1 || j < 1) throw std::out_of_range("comp_upof: cell indices must be >= 1");
    for (int r = std::min(j - 1, a.length()); r >= 1; --r)
        if (a.contains(i, r)) return {i, r};
    return {i, 0};
}

inline Cell comp_leftof(int i, int j) {
    if (i < 2 || j < 1) throw std::out_of_range("comp_leftof: needs column >= 2");
    return {i - 1, j};
}

// One more than the number of cells above (i, j) in its column: the 1-based
// position of the cell when the column is read top to bottom.
inline int comp_colpos(const Composition& a, int i, int j) {
    if (i < 1 || j < 1) throw std::out_of_range("comp_colpos: cell indices must be >= 1");
    int above = 0;
    for (int r = 1; r < j && r <= a.length(); ++r)
        if (a.contains(i, r)) ++above;
    return above + 1;
}

} // namespace stacksort
