#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "syt/cell.hpp"
#include "syt/error.hpp"

namespace syt {

// Finite cell set with set semantics. Cells are kept sorted row-major,
// which doubles as the canonical enumeration order of a tableau's cells.
class Shape {
public:
    Shape() = default;
    explicit Shape(std::vector<Cell> cells) : cells_(std::move(cells)) {
        std::sort(cells_.begin(), cells_.end());
        cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    }

    size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    const std::vector<Cell>& cells() const { return cells_; }
    Cell cell(size_t i) const { return cells_[i]; }

    bool contains(Cell c) const {
        return std::binary_search(cells_.begin(), cells_.end(), c);
    }
    // index of c in canonical order; -1 if absent
    int index_of(Cell c) const {
        auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
        if (it == cells_.end() || *it != c) return -1;
        return static_cast<int>(it - cells_.begin());
    }

    int min_row() const { return cells_.front().row; }
    int max_row() const { return cells_.back().row; }
    int min_col() const {
        int m = cells_.front().col;
        for (Cell c : cells_) m = std::min(m, c.col);
        return m;
    }
    int max_col() const {
        int m = cells_.front().col;
        for (Cell c : cells_) m = std::max(m, c.col);
        return m;
    }

    // cells of the given row, in column order
    std::vector<Cell> row_cells(int row) const {
        std::vector<Cell> r;
        auto lo = std::lower_bound(cells_.begin(), cells_.end(), Cell{row, INT_MIN_});
        for (auto it = lo; it != cells_.end() && it->row == row; ++it) r.push_back(*it);
        return r;
    }

    std::vector<Cell> col_cells(int col) const {
        std::vector<Cell> r;
        for (Cell c : cells_)
            if (c.col == col) r.push_back(c);
        return r;
    }

    std::vector<int> rows() const {
        std::vector<int> r;
        for (Cell c : cells_)
            if (r.empty() || r.back() != c.row) r.push_back(c.row);
        return r;
    }

    Shape translated(Cell d) const {
        std::vector<Cell> v;
        v.reserve(cells_.size());
        for (Cell c : cells_) v.push_back(c + d);
        Shape s;
        s.cells_ = std::move(v);  // translation preserves order
        return s;
    }

    Shape united(const Shape& o) const {
        std::vector<Cell> v;
        v.reserve(size() + o.size());
        std::set_union(cells_.begin(), cells_.end(), o.cells_.begin(), o.cells_.end(),
                       std::back_inserter(v));
        Shape s;
        s.cells_ = std::move(v);
        return s;
    }

    Shape minus(const Shape& o) const {
        std::vector<Cell> v;
        std::set_difference(cells_.begin(), cells_.end(), o.cells_.begin(), o.cells_.end(),
                            std::back_inserter(v));
        Shape s;
        s.cells_ = std::move(v);
        return s;
    }

    Shape intersected(const Shape& o) const {
        std::vector<Cell> v;
        std::set_intersection(cells_.begin(), cells_.end(), o.cells_.begin(), o.cells_.end(),
                              std::back_inserter(v));
        Shape s;
        s.cells_ = std::move(v);
        return s;
    }

    bool subset_of(const Shape& o) const {
        return std::includes(o.cells_.begin(), o.cells_.end(), cells_.begin(), cells_.end());
    }

    friend bool operator==(const Shape& a, const Shape& b) { return a.cells_ == b.cells_; }
    friend bool operator!=(const Shape& a, const Shape& b) { return !(a == b); }
    friend bool operator<(const Shape& a, const Shape& b) {
        return std::lexicographical_compare(a.cells_.begin(), a.cells_.end(),
                                            b.cells_.begin(), b.cells_.end());
    }

    std::string ascii() const {
        if (empty()) return "(empty)\n";
        std::string out;
        for (int r = min_row(); r <= max_row(); ++r) {
            for (int c = min_col(); c <= max_col(); ++c)
                out += contains({r, c}) ? '#' : '.';
            out += '\n';
        }
        return out;
    }

private:
    std::vector<Cell> cells_;
    static constexpr int INT_MIN_ = -2147483647 - 1;
};

inline bool is_connected(const Shape& s) {
    if (s.empty()) fail(errc::empty_shape, "connectivity of empty shape");
    std::vector<char> seen(s.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    size_t reached = 1;
    const Cell steps[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    while (!stack.empty()) {
        Cell c = s.cell(static_cast<size_t>(stack.back()));
        stack.pop_back();
        for (Cell d : steps) {
            int j = s.index_of(c + d);
            if (j >= 0 && !seen[j]) {
                seen[j] = 1;
                ++reached;
                stack.push_back(j);
            }
        }
    }
    return reached == s.size();
}

// Unique translate with min row 1 and min col 1: cannot be shifted further
// up or left while staying inside the positive quadrant.
inline Shape normalize(const Shape& s) {
    if (s.empty()) fail(errc::empty_shape, "normalize of empty shape");
    return s.translated({1 - s.min_row(), 1 - s.min_col()});
}

// Cells of s weakly above v and strictly right of v.
inline Shape corner(const Shape& s, Cell v) {
    std::vector<Cell> out;
    for (Cell c : s.cells())
        if (c.row <= v.row && c.col > v.col) out.push_back(c);
    return Shape(std::move(out));
}

// Row lengths lambda with trims mu applied bottom-up: mu_1 removes the
// leftmost mu_1 cells of the lowest row, mu_2 of the next row up, and so on.
inline Shape from_skew(const std::vector<int>& lambda, const std::vector<int>& mu) {
    auto weakly_decreasing = [](const std::vector<int>& v) {
        for (size_t i = 0; i + 1 < v.size(); ++i)
            if (v[i] < v[i + 1]) return false;
        return true;
    };
    for (int p : lambda)
        if (p <= 0) fail(errc::invalid_partition, "lambda parts must be positive");
    for (int p : mu)
        if (p < 0) fail(errc::invalid_partition, "mu parts must be nonnegative");
    if (!weakly_decreasing(lambda)) fail(errc::invalid_partition, "lambda not weakly decreasing");
    if (!weakly_decreasing(mu)) fail(errc::invalid_partition, "mu not weakly decreasing");
    if (lambda.empty()) fail(errc::invalid_partition, "lambda is empty");
    if (mu.size() > lambda.size()) fail(errc::invalid_partition, "mu has more parts than lambda");

    int m = static_cast<int>(lambda.size());
    std::vector<Cell> cells;
    for (int r = 1; r <= m; ++r) {
        int trim = 0;
        int from_bottom = m - r + 1;  // row m is trimmed by mu_1
        if (from_bottom <= static_cast<int>(mu.size())) trim = mu[from_bottom - 1];
        if (trim >= lambda[r - 1])
            fail(errc::empty_row, "mu trims row " + std::to_string(r) + " to nothing");
        for (int c = trim + 1; c <= lambda[r - 1]; ++c) cells.push_back({r, c});
    }
    Shape s(std::move(cells));
    if (!s.contains({1, 1}))
        fail(errc::missing_origin, "skew cell set does not contain (1,1)");
    return s;
}

// All strictly-southwest/northeast cell pairs of s, as (sw, ne).
inline std::vector<std::pair<Cell, Cell>> southwest_pairs(const Shape& s) {
    std::vector<std::pair<Cell, Cell>> out;
    const auto& cs = s.cells();
    for (size_t i = 0; i < cs.size(); ++i)
        for (size_t j = 0; j < cs.size(); ++j)
            if (strictly_southwest(cs[i], cs[j])) out.emplace_back(cs[i], cs[j]);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace syt
