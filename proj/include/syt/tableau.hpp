#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "syt/bigint.hpp"
#include "syt/shape.hpp"

namespace syt {

// Injective filling of a shape. values[i] is the entry of the i-th cell in
// the shape's canonical row-major order.
struct Tableau {
    Shape shape;
    std::vector<int> values;

    int entry(Cell c) const {
        int i = shape.index_of(c);
        if (i < 0) fail(errc::index_out_of_range, "cell not in shape");
        return values[static_cast<size_t>(i)];
    }

    friend bool operator==(const Tableau& a, const Tableau& b) {
        return a.shape == b.shape && a.values == b.values;
    }
    friend bool operator!=(const Tableau& a, const Tableau& b) { return !(a == b); }
};

// Adjacent-cell increase only; gaps inside a row or column impose nothing.
inline bool is_partial_tableau(const Tableau& t) {
    if (t.values.size() != t.shape.size()) return false;
    std::vector<int> sorted = t.values;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] <= 0) return false;
        if (i > 0 && sorted[i] == sorted[i - 1]) return false;
    }
    for (size_t i = 0; i < t.shape.size(); ++i) {
        Cell c = t.shape.cell(i);
        int right = t.shape.index_of({c.row, c.col + 1});
        if (right >= 0 && !(t.values[i] < t.values[static_cast<size_t>(right)])) return false;
        int down = t.shape.index_of({c.row + 1, c.col});
        if (down >= 0 && !(t.values[i] < t.values[static_cast<size_t>(down)])) return false;
    }
    return true;
}

inline bool is_standard(const Tableau& t) {
    if (!is_partial_tableau(t)) return false;
    std::vector<int> sorted = t.values;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i) + 1) return false;
    return true;
}

namespace detail {

// Bitmask of cells that must be filled before cell i: the in-shape left and
// up neighbors.
inline std::vector<uint64_t> predecessor_masks(const Shape& s) {
    if (s.size() > 64) fail(errc::shape_too_large, "counting supports at most 64 cells");
    std::vector<uint64_t> pred(s.size(), 0);
    for (size_t i = 0; i < s.size(); ++i) {
        Cell c = s.cell(i);
        int left = s.index_of({c.row, c.col - 1});
        if (left >= 0) pred[i] |= 1ull << left;
        int up = s.index_of({c.row - 1, c.col});
        if (up >= 0) pred[i] |= 1ull << up;
    }
    return pred;
}

} // namespace detail

// Number of linear extensions of the precedence system given by pred masks,
// by memoized dynamic programming over down-closed fill states.
inline BigInt count_linear_extensions(size_t n, const std::vector<uint64_t>& pred) {
    if (n > 64) fail(errc::shape_too_large, "counting supports at most 64 cells");
    const uint64_t full = n == 64 ? ~0ull : (1ull << n) - 1;
    std::unordered_map<uint64_t, BigInt> memo;
    std::function<const BigInt&(uint64_t)> go = [&](uint64_t mask) -> const BigInt& {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        BigInt total;
        if (mask == full) {
            total = BigInt(1);
        } else {
            for (size_t i = 0; i < n; ++i) {
                uint64_t bit = 1ull << i;
                if ((mask & bit) == 0 && (pred[i] & ~mask) == 0) total += go(mask | bit);
            }
        }
        return memo.emplace(mask, std::move(total)).first->second;
    };
    return go(0);
}

inline BigInt count_syt(const Shape& s) {
    if (s.empty()) fail(errc::empty_shape, "counting fillings of the empty shape");
    return count_linear_extensions(s.size(), detail::predecessor_masks(s));
}

// Visits every standard filling once, in depth-first insertion order. The
// visited tableau is reused between calls; copy it if you keep it.
inline void enumerate_syt_visit(const Shape& s, const std::function<void(const Tableau&)>& visit) {
    if (s.empty()) fail(errc::empty_shape, "enumerating fillings of the empty shape");
    const size_t n = s.size();
    auto pred = detail::predecessor_masks(s);
    Tableau t;
    t.shape = s;
    t.values.assign(n, 0);
    uint64_t mask = 0;
    std::function<void(size_t)> go = [&](size_t depth) {
        if (depth == n) {
            visit(t);
            return;
        }
        for (size_t i = 0; i < n; ++i) {
            uint64_t bit = 1ull << i;
            if ((mask & bit) == 0 && (pred[i] & ~mask) == 0) {
                mask |= bit;
                t.values[i] = static_cast<int>(depth) + 1;
                go(depth + 1);
                t.values[i] = 0;
                mask &= ~bit;
            }
        }
    };
    go(0);
}

// Entries of each column read bottom-to-top, columns right-to-left.
inline std::vector<int> column_word(const Tableau& t) {
    std::vector<int> word;
    word.reserve(t.shape.size());
    std::vector<std::pair<Cell, int>> by_col;
    for (size_t i = 0; i < t.shape.size(); ++i)
        by_col.emplace_back(t.shape.cell(i), t.values[i]);
    std::sort(by_col.begin(), by_col.end(), [](const auto& a, const auto& b) {
        if (a.first.col != b.first.col) return a.first.col > b.first.col;
        return a.first.row > b.first.row;
    });
    for (const auto& [c, v] : by_col) word.push_back(v);
    return word;
}

inline std::string word_string(const std::vector<int>& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(w[i]);
    }
    return s;
}

// Position of each value in the column reading: entry v of the result is
// where v appears in column_word(t). Lexicographic comparison of these
// sequences is the canonical tableau order used for transfer bases.
inline std::vector<int> inverse_column_word(const Tableau& t) {
    auto w = column_word(t);
    std::vector<int> inv(w.size());
    for (size_t i = 0; i < w.size(); ++i) inv[static_cast<size_t>(w[i] - 1)] = static_cast<int>(i) + 1;
    return inv;
}

// All standard fillings in the canonical order: ascending lexicographic
// inverse column word.
inline std::vector<Tableau> enumerate_syt(const Shape& s, size_t max_cells = 22) {
    if (s.size() > max_cells)
        fail(errc::shape_too_large, std::to_string(s.size()) + " cells exceeds the limit of " +
                                        std::to_string(max_cells));
    std::vector<Tableau> all;
    enumerate_syt_visit(s, [&](const Tableau& t) { all.push_back(t); });
    std::stable_sort(all.begin(), all.end(), [](const Tableau& a, const Tableau& b) {
        return inverse_column_word(a) < inverse_column_word(b);
    });
    return all;
}

// Inversion graph: one edge per strictly-southwest pair whose lower-left
// entry is the smaller one.
struct TableauGraph {
    Shape vertices;
    std::vector<std::pair<Cell, Cell>> edges;  // (southwest, northeast), sorted

    friend bool operator==(const TableauGraph& a, const TableauGraph& b) {
        return a.vertices == b.vertices && a.edges == b.edges;
    }
    friend bool operator!=(const TableauGraph& a, const TableauGraph& b) { return !(a == b); }
};

inline TableauGraph tableau_graph(const Tableau& t) {
    TableauGraph g;
    g.vertices = t.shape;
    const auto& cs = t.shape.cells();
    for (size_t i = 0; i < cs.size(); ++i)
        for (size_t j = 0; j < cs.size(); ++j)
            if (strictly_southwest(cs[i], cs[j]) && t.values[i] < t.values[j])
                g.edges.emplace_back(cs[i], cs[j]);
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

// Only one translation can work: the one matching the normalization anchors.
inline bool graphs_isomorphic(const TableauGraph& g, const TableauGraph& h) {
    if (g.vertices.size() != h.vertices.size() || g.edges.size() != h.edges.size()) return false;
    if (g.vertices.empty()) return true;
    Cell d{h.vertices.min_row() - g.vertices.min_row(),
           h.vertices.min_col() - g.vertices.min_col()};
    if (g.vertices.translated(d) != h.vertices) return false;
    for (size_t i = 0; i < g.edges.size(); ++i)
        if (g.edges[i].first + d != h.edges[i].first ||
            g.edges[i].second + d != h.edges[i].second)
            return false;
    return true;
}

// Row-major fill: adjacent same-row cells always get consecutive entries.
inline Tableau source_tableau(const Shape& s) {
    if (s.empty()) fail(errc::empty_shape, "source of empty shape");
    Tableau t;
    t.shape = s;
    t.values.resize(s.size());
    for (size_t i = 0; i < s.size(); ++i) t.values[i] = static_cast<int>(i) + 1;
    for (size_t i = 0; i < s.size(); ++i) {
        Cell c = s.cell(i);
        int right = s.index_of({c.row, c.col + 1});
        if (right >= 0 && t.values[static_cast<size_t>(right)] != t.values[i] + 1)
            fail(errc::construction_failed, "row-consecutive property does not hold");
    }
    if (!is_standard(t)) fail(errc::construction_failed, "row-major fill is not standard");
    return t;
}

// Column-major fill: adjacent same-column cells always get consecutive entries.
inline Tableau sink_tableau(const Shape& s) {
    if (s.empty()) fail(errc::empty_shape, "sink of empty shape");
    std::vector<size_t> order(s.size());
    for (size_t i = 0; i < s.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        Cell ca = s.cell(a), cb = s.cell(b);
        if (ca.col != cb.col) return ca.col < cb.col;
        return ca.row < cb.row;
    });
    Tableau t;
    t.shape = s;
    t.values.resize(s.size());
    for (size_t rank = 0; rank < order.size(); ++rank)
        t.values[order[rank]] = static_cast<int>(rank) + 1;
    for (size_t i = 0; i < s.size(); ++i) {
        Cell c = s.cell(i);
        int down = s.index_of({c.row + 1, c.col});
        if (down >= 0 && t.values[static_cast<size_t>(down)] != t.values[i] + 1)
            fail(errc::construction_failed, "column-consecutive property does not hold");
    }
    if (!is_standard(t)) fail(errc::construction_failed, "column-major fill is not standard");
    return t;
}

// Covering move of the tableau order, oriented so a performed swap adds
// exactly one inversion edge. Returns the input unchanged when the pair is
// already inverted, and nothing when the two cells are weakly comparable.
inline std::optional<Tableau> apply_pi(const Tableau& t, int i) {
    int n = static_cast<int>(t.shape.size());
    if (i < 1 || i >= n) fail(errc::index_out_of_range, "operator index out of range");
    size_t pos_i = 0, pos_j = 0;
    for (size_t k = 0; k < t.values.size(); ++k) {
        if (t.values[k] == i) pos_i = k;
        if (t.values[k] == i + 1) pos_j = k;
    }
    Cell u = t.shape.cell(pos_i);  // holds i
    Cell v = t.shape.cell(pos_j);  // holds i+1
    if (strictly_southwest(u, v)) return t;  // edge {u,v} already present
    if (strictly_southwest(v, u)) {
        Tableau r = t;
        std::swap(r.values[pos_i], r.values[pos_j]);
        return r;
    }
    return std::nullopt;
}

// Explicit cover digraph over all standard fillings of a shape, elements in
// canonical order. Arcs point from smaller to larger.
struct SytPoset {
    std::vector<Tableau> elements;
    std::vector<std::pair<int, int>> covers;
    int source_index = -1;
    int sink_index = -1;
};

inline SytPoset build_syt_poset(const Shape& s, size_t max_tableaux = 5000,
                                size_t max_cells = 22) {
    SytPoset poset;
    poset.elements = enumerate_syt(s, max_cells);
    if (poset.elements.size() > max_tableaux)
        fail(errc::too_many_tableaux,
             std::to_string(poset.elements.size()) + " fillings exceed the limit");
    std::map<std::vector<int>, int> index;
    for (size_t k = 0; k < poset.elements.size(); ++k)
        index[poset.elements[k].values] = static_cast<int>(k);
    int n = static_cast<int>(s.size());
    for (size_t k = 0; k < poset.elements.size(); ++k) {
        for (int i = 1; i < n; ++i) {
            auto moved = apply_pi(poset.elements[k], i);
            if (moved && moved->values != poset.elements[k].values)
                poset.covers.emplace_back(static_cast<int>(k), index.at(moved->values));
        }
    }
    std::sort(poset.covers.begin(), poset.covers.end());
    poset.covers.erase(std::unique(poset.covers.begin(), poset.covers.end()),
                       poset.covers.end());

    std::vector<int> indeg(poset.elements.size(), 0), outdeg(poset.elements.size(), 0);
    for (auto [from, to] : poset.covers) {
        ++outdeg[static_cast<size_t>(from)];
        ++indeg[static_cast<size_t>(to)];
    }
    for (size_t k = 0; k < poset.elements.size(); ++k) {
        if (indeg[k] == 0) poset.source_index = poset.source_index == -1 ? static_cast<int>(k) : -2;
        if (outdeg[k] == 0) poset.sink_index = poset.sink_index == -1 ? static_cast<int>(k) : -2;
    }
    return poset;
}

inline std::string poset_to_dot(const SytPoset& poset) {
    std::string out = "digraph syt_poset {\n  rankdir=BT;\n";
    for (size_t k = 0; k < poset.elements.size(); ++k) {
        out += "  n" + std::to_string(k) + " [label=\"" +
               word_string(column_word(poset.elements[k])) + "\"";
        if (static_cast<int>(k) == poset.source_index) out += ", shape=box, color=blue";
        if (static_cast<int>(k) == poset.sink_index) out += ", shape=box, color=red";
        out += "];\n";
    }
    for (auto [from, to] : poset.covers)
        out += "  n" + std::to_string(from) + " -> n" + std::to_string(to) + ";\n";
    out += "}\n";
    return out;
}

// Restriction of t to `region`, translated back by -offset and re-ranked to
// a standard filling. `region` must be offset + the target shape.
inline Tableau restricted_pattern(const Tableau& t, const Shape& region, Cell offset) {
    if (!region.subset_of(t.shape))
        fail(errc::not_on_coefficient_shape, "restriction region escapes the tableau");
    std::vector<std::pair<int, size_t>> ranked;
    Shape target = region.translated(Cell{0, 0} - offset);
    ranked.reserve(region.size());
    for (size_t i = 0; i < region.size(); ++i) {
        Cell c = region.cell(i) - offset;
        ranked.emplace_back(t.entry(region.cell(i)), static_cast<size_t>(target.index_of(c)));
    }
    std::sort(ranked.begin(), ranked.end());
    Tableau out;
    out.shape = target;
    out.values.assign(target.size(), 0);
    for (size_t rank = 0; rank < ranked.size(); ++rank)
        out.values[ranked[rank].second] = static_cast<int>(rank) + 1;
    return out;
}

} // namespace syt
