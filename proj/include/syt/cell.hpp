#pragma once

#include <cstdint>
#include <functional>

namespace syt {

// Lattice cell in matrix convention: (row, col), row grows downward.
struct Cell {
    int row = 0;
    int col = 0;

    friend Cell operator+(Cell a, Cell b) { return {a.row + b.row, a.col + b.col}; }
    friend Cell operator-(Cell a, Cell b) { return {a.row - b.row, a.col - b.col}; }
    friend Cell operator*(int k, Cell a) { return {k * a.row, k * a.col}; }
    friend bool operator==(Cell a, Cell b) { return a.row == b.row && a.col == b.col; }
    friend bool operator!=(Cell a, Cell b) { return !(a == b); }
    // row-major order; also the canonical storage order of Shape
    friend bool operator<(Cell a, Cell b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    }
};

// u strictly south-west of v: strictly below and strictly left.
inline bool strictly_southwest(Cell u, Cell v) {
    return u.row > v.row && u.col < v.col;
}

// u weakly north-west of v: weakly above and weakly left.
inline bool weakly_northwest(Cell u, Cell v) {
    return u.row <= v.row && u.col <= v.col;
}

} // namespace syt

template <>
struct std::hash<syt::Cell> {
    size_t operator()(syt::Cell c) const noexcept {
        return std::hash<long long>()((static_cast<long long>(c.row) << 32) ^
                                      static_cast<unsigned>(c.col));
    }
};
