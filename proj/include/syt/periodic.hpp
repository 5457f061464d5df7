#pragma once

#include <optional>
#include <string>
#include <vector>

#include "syt/shape.hpp"

namespace syt {

// A validated repeating unit. `a` is the leftmost cell of the top row,
// `b` the leftmost cell of the bottom row. Construct via validate_periodic.
struct PeriodicShape {
    Shape shape;
    Cell a{1, 1};
    Cell b{1, 1};
};

namespace detail {

struct RowInterval {
    int row, lo, hi;
};

// Rows must be contiguous intervals whose left and right ends both move
// weakly rightward going down; that is exactly the staircase orientation
// shifted unions have, and the orientation skew periods are stated in.
inline std::vector<RowInterval> row_intervals_checked(const Shape& s) {
    std::vector<RowInterval> rows;
    for (int r : s.rows()) {
        auto cs = s.row_cells(r);
        int lo = cs.front().col, hi = cs.back().col;
        if (static_cast<int>(cs.size()) != hi - lo + 1)
            fail(errc::row_not_contiguous, "row " + std::to_string(r) + " has gaps");
        if (!rows.empty()) {
            if (rows.back().row + 1 != r)
                fail(errc::disconnected, "missing row " + std::to_string(rows.back().row + 1));
            if (lo < rows.back().lo || hi < rows.back().hi)
                fail(errc::row_not_contiguous,
                     "row " + std::to_string(r) + " steps left of the row above");
        }
        rows.push_back({r, lo, hi});
    }
    return rows;
}

inline void check_interior_columns(const Shape& s) {
    int lo = s.min_col(), hi = s.max_col();
    for (int col = lo + 1; col < hi; ++col) {
        bool braced = false;
        bool occupied = false;
        for (Cell c : s.col_cells(col)) {
            occupied = true;
            if (s.contains({c.row, col - 1}) && s.contains({c.row, col + 1})) {
                braced = true;
                break;
            }
        }
        if (occupied && !braced)
            fail(errc::interior_column_violation,
                 "column " + std::to_string(col) + " has no cell with both horizontal neighbors");
    }
}

} // namespace detail

// Checks every defining condition of a repeating unit and returns the
// wrapper with its row anchors. Throws the condition that failed.
inline PeriodicShape validate_periodic(const Shape& s) {
    if (s.empty()) fail(errc::empty_shape, "empty shape cannot be periodic");
    if (!s.contains({1, 1})) fail(errc::missing_origin, "shape does not contain (1,1)");
    if (s.min_row() != 1 || s.min_col() != 1)
        fail(errc::row_not_contiguous, "shape extends above row 1 or left of column 1");
    auto rows = detail::row_intervals_checked(s);
    if (!is_connected(s)) fail(errc::disconnected, "shape is not 4-connected");
    detail::check_interior_columns(s);
    PeriodicShape p;
    p.shape = s;
    p.a = {rows.front().row, rows.front().lo};
    p.b = {rows.back().row, rows.back().lo};
    return p;
}

inline Cell shift_vector(const PeriodicShape& p, int w) {
    return p.b - p.a + Cell{1, w};
}

// Union of m translated copies of the period, copies i = 0..m-1. Copies of a
// validated period occupy disjoint row blocks; the cardinality check guards
// hand-built wrappers that bypassed validation.
inline Shape generate_shifted(const PeriodicShape& p, int w, int m) {
    if (m < 1) fail(errc::index_out_of_range, "need at least one copy");
    Cell step = shift_vector(p, w);
    Shape out;
    for (int i = 0; i < m; ++i) out = out.united(p.shape.translated(i * step));
    if (out.size() != p.shape.size() * static_cast<size_t>(m))
        fail(errc::overlapping_copies, "translated copies intersect");
    return out;
}

struct CompatibilityResult {
    bool compatible = false;
    std::string reason;  // empty when compatible
    explicit operator bool() const { return compatible; }
};

// Decidable stand-in for the all-n conditions: the horizontal step must be
// positive (otherwise some column keeps growing), and the 2- and 3-copy
// unions must themselves validate. Any gluing defect between consecutive
// copies is a translate of one visible there already.
inline CompatibilityResult is_compatible(const PeriodicShape& p, int w) {
    Cell step = shift_vector(p, w);
    if (step.col < 1) return {false, "unbounded columns (horizontal step < 1)"};
    for (int m : {2, 3}) {
        try {
            validate_periodic(generate_shifted(p, w, m));
        } catch (const error& e) {
            return {false, std::to_string(m) + "-copy union not periodic: " + e.what()};
        }
    }
    return {true, ""};
}

// Index and coefficient shapes with the translation bookkeeping the
// transfer construction needs. All shapes are normalized; the offsets place
// translated copies of `index` inside `coefficient`.
struct IndexShapes {
    Shape index;        // I(P,w), normalized
    Shape coefficient;  // C(P,w), normalized
    Cell step;          // shift vector
    Cell t_top;         // index + t_top = top copy of I inside coefficient
    Cell t_bot;         // index + t_bot = bottom copy of I inside coefficient
    Cell t_period;      // period.shape + t_period = the bottom period copy inside coefficient
    Cell u_in_index;    // position of the defining bottom-row cell u inside `index`
    int m_star = 0;     // copy count the construction stabilized at
};

namespace detail {

struct RawIndexShapes {
    Shape index_raw, top_raw, coeff_raw;
    Cell u;
    bool touches_first_row = false;
    bool ok = false;
};

inline RawIndexShapes corner_shapes_at(const PeriodicShape& p, int w, int m) {
    RawIndexShapes out;
    Cell step = shift_vector(p, w);
    Shape s = generate_shifted(p, w, m);
    Cell u = p.a + m * step - Cell{1, 0};
    if (!s.contains(u) || u.row != s.max_row()) return out;
    Shape bottom = corner(s, u).united(Shape({u}));
    Cell u2 = u - step;
    if (!s.contains(u2)) return out;
    Shape top = corner(s, u2).united(Shape({u2}));
    Shape last_copy = p.shape.translated((m - 1) * step);
    out.index_raw = bottom;
    out.top_raw = top;
    out.coeff_raw = top.united(bottom).united(last_copy);
    out.u = u;
    out.touches_first_row = top.united(bottom).min_row() <= s.min_row();
    out.ok = true;
    return out;
}

} // namespace detail

// Builds both boundary shapes at the smallest copy count where the corner
// construction clears the first copy's top row, then re-runs one copy higher
// and insists the normalized results agree.
inline IndexShapes index_shapes(const PeriodicShape& p, int w) {
    auto compat = is_compatible(p, w);
    if (!compat) fail(errc::not_compatible, compat.reason);
    Cell step = shift_vector(p, w);

    constexpr int kMaxCopies = 64;
    int m_star = 0;
    detail::RawIndexShapes raw;
    for (int m = 2; m <= kMaxCopies; ++m) {
        raw = detail::corner_shapes_at(p, w, m);
        if (raw.ok && !raw.touches_first_row) {
            m_star = m;
            break;
        }
    }
    if (m_star == 0) fail(errc::unstable_shape, "corner construction did not stabilize");

    auto next = detail::corner_shapes_at(p, w, m_star + 1);
    if (!next.ok || normalize(raw.index_raw) != normalize(next.index_raw) ||
        normalize(raw.coeff_raw) != normalize(next.coeff_raw))
        fail(errc::unstable_shape, "boundary shapes differ between copy counts " +
                                       std::to_string(m_star) + " and " +
                                       std::to_string(m_star + 1));
    if (raw.top_raw != raw.index_raw.translated(Cell{0, 0} - step))
        fail(errc::unstable_shape, "top corner set is not a step-back translate of the bottom one");

    IndexShapes out;
    out.step = step;
    out.m_star = m_star;
    Cell s_index{1 - raw.index_raw.min_row(), 1 - raw.index_raw.min_col()};
    Cell s_coeff{1 - raw.coeff_raw.min_row(), 1 - raw.coeff_raw.min_col()};
    out.index = raw.index_raw.translated(s_index);
    out.coefficient = raw.coeff_raw.translated(s_coeff);
    out.u_in_index = raw.u + s_index;
    out.t_bot = s_coeff - s_index;                      // index_raw -> coeff frame
    out.t_top = out.t_bot - step;                       // top copy sits one step back
    out.t_period = (m_star - 1) * step + s_coeff;       // period frame -> coeff frame

    if (!out.index.translated(out.t_bot).subset_of(out.coefficient) ||
        !out.index.translated(out.t_top).subset_of(out.coefficient) ||
        !p.shape.translated(out.t_period).subset_of(out.coefficient))
        fail(errc::internal_inconsistency, "boundary translates escape the coefficient shape");
    return out;
}

inline Shape index_shape(const PeriodicShape& p, int w) { return index_shapes(p, w).index; }

inline Shape coefficient_shape(const PeriodicShape& p, int w) {
    return index_shapes(p, w).coefficient;
}

// Translation placing `index` at its anchored position inside the m-copy
// union: the defining cell u lands at a + m*step - (1,0).
inline Cell index_anchor(const PeriodicShape& p, const IndexShapes& geom, int m) {
    return p.a + m * geom.step - Cell{1, 0} - geom.u_in_index;
}

// Smallest m whose m-copy union contains the anchored translate of the
// index shape.
inline int n_min(const PeriodicShape& p, int w, const IndexShapes& geom) {
    constexpr int kMaxCopies = 4096;
    for (int m = 1; m <= kMaxCopies; ++m) {
        Shape s = generate_shifted(p, w, m);
        if (geom.index.translated(index_anchor(p, geom, m)).subset_of(s)) return m;
    }
    fail(errc::internal_inconsistency, "no copy count contains the index shape");
}

inline int n_min(const PeriodicShape& p, int w) {
    return n_min(p, w, index_shapes(p, w));
}

} // namespace syt
