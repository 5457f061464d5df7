#pragma once

#include <map>
#include <string>
#include <vector>

#include "syt/transfer.hpp"

namespace syt {

// Outcome of the redundancy scan, with the first failed clause named so a
// rejection can be audited.
struct RedundancyCheck {
    bool redundant = false;
    std::string failed_clause;  // empty when redundant
    explicit operator bool() const { return redundant; }
};

// A subset of the index shape whose removal from the boundary state provably
// cannot change a transfer row, together with the clauses that certified it.
struct RedundantSubset {
    Shape cells;               // subset of the normalized index shape
    size_t class_count = 0;    // number of induced state classes
    std::vector<std::string> checked_clauses;
};

namespace detail {

// Every strictly-southwest pair of the column-major (sink) filling is
// inverted, so the sink graph's edge set is exactly the set of SW/NE pairs.
struct RedundancyFrame {
    Shape coeff;
    Shape period_copy;   // B: bottom period copy inside the coefficient shape
    Shape upper;         // A = coeff minus B
    Shape bottom_index;  // bottom boundary copy inside the coefficient shape
    Shape b_prime;       // the candidate subset, translated to the bottom copy
};

inline bool plausibly_regular(const Shape& s) {
    if (s.empty()) return true;
    if (!is_connected(s)) return false;
    int prev_lo = 0, prev_hi = 0;
    bool first = true;
    for (int r : s.rows()) {
        auto cs = s.row_cells(r);
        int lo = cs.front().col, hi = cs.back().col;
        if (static_cast<int>(cs.size()) != hi - lo + 1) return false;
        if (!first && (lo < prev_lo || hi < prev_hi)) return false;
        prev_lo = lo;
        prev_hi = hi;
        first = false;
    }
    return true;
}

} // namespace detail

// Finite certificate scan over the coefficient shape's sink graph. The
// clauses classify every strictly-southwest pair against the membership of
// its endpoints in (upper part, bottom period copy, translated subset):
//   position: the subset sits strictly inside the bottom copy, reaches the
//     bottom row and the rightmost column, and has staircase row structure;
//   interface: a pair whose northeast endpoint lies in the subset stays
//     inside the bottom copy;
//   coverage: a pair from outside the subset competing for a northeast cell
//     with a subset pair must come from weakly north-west of it;
//   bridge: every subset pair into the upper part is witnessed by a pair
//     from the remaining bottom boundary cells, weakly north-west of it and
//     dominating all outside competitors.
inline RedundancyCheck check_redundant_subset(const PeriodicShape& p, int w, const Shape& s,
                                              const IndexShapes& geom) {
    (void)w;
    if (!s.empty() && !s.subset_of(geom.index))
        fail(errc::not_a_subset, "candidate is not a subset of the index shape");
    if (s.empty()) return {true, ""};

    detail::RedundancyFrame f;
    f.coeff = geom.coefficient;
    f.period_copy = p.shape.translated(geom.t_period);
    f.upper = f.coeff.minus(f.period_copy);
    f.bottom_index = geom.index.translated(geom.t_bot);
    f.b_prime = s.translated(geom.t_bot);

    if (!f.b_prime.subset_of(f.period_copy) || f.b_prime == f.period_copy)
        return {false, "position: subset escapes the bottom period copy"};
    if (f.b_prime.max_row() != f.coeff.max_row())
        return {false, "position: subset misses the bottom row"};
    if (f.b_prime.max_col() != f.coeff.max_col())
        return {false, "position: subset misses the rightmost column"};
    if (!detail::plausibly_regular(f.b_prime))
        return {false, "position: subset lacks staircase row structure"};

    auto pairs = southwest_pairs(f.coeff);

    for (const auto& [u, v] : pairs) {
        if (f.upper.contains(u) && f.period_copy.contains(v))
            return {false, "interface: pair climbs from the upper part into the bottom copy"};
        if (f.b_prime.contains(v) && !f.b_prime.contains(u))
            return {false, "interface: pair into the subset from outside it"};
    }

    for (const auto& [u, v] : pairs) {
        if (!f.b_prime.contains(u) || f.b_prime.contains(v)) continue;
        // Competitors for the same northeast cell whose pair is invisible to
        // the bottom boundary pattern. Their status must be forced through a
        // witness pair the boundary pattern does carry.
        std::vector<Cell> invisible;
        for (const auto& [z, v2] : pairs) {
            if (v2 != v || f.b_prime.contains(z)) continue;
            if (f.bottom_index.contains(z) && f.bottom_index.contains(v)) continue;
            if (!weakly_northwest(z, u))
                return {false, "coverage: outside competitor is not weakly north-west"};
            invisible.push_back(z);
        }
        if (invisible.empty()) continue;
        if (!f.bottom_index.contains(v))
            return {false, "bridge: contested pair leaves the bottom boundary region"};
        bool found = false;
        for (Cell y : f.bottom_index.cells()) {
            if (f.b_prime.contains(y) || !strictly_southwest(y, v) || !weakly_northwest(y, u))
                continue;
            bool dominates = true;
            for (Cell z : invisible)
                if (!weakly_northwest(z, y)) {
                    dominates = false;
                    break;
                }
            if (dominates) { found = true; break; }
        }
        if (!found) return {false, "bridge: no dominating witness for a contested pair"};
    }
    return {true, ""};
}

inline bool is_redundant_subset(const PeriodicShape& p, int w, const Shape& s) {
    return check_redundant_subset(p, w, s, index_shapes(p, w)).redundant;
}

// Basis states grouped by the inversion graph of their restriction to the
// index shape minus the subset. Classes are listed by least member; the
// representative is the least (hence column-word-least) member.
struct EquivalencePartition {
    Shape removed;                          // the subset that induced the classes
    std::vector<std::vector<int>> classes;  // disjoint basis indices, each sorted
    std::vector<int> representative;        // per class
};

inline EquivalencePartition equivalence_partition(const TransferSystem& ts, const Shape& s) {
    auto check = check_redundant_subset(ts.period, ts.w, s, ts.geom);
    if (!check)
        fail(errc::not_redundant, "subset failed the certificate scan: " + check.failed_clause);

    Shape kept = ts.geom.index.minus(s);
    auto kept_pairs = southwest_pairs(kept);
    std::map<std::vector<char>, std::vector<int>> groups;
    for (size_t i = 0; i < ts.basis.size(); ++i) {
        std::vector<char> key;
        key.reserve(kept_pairs.size());
        for (const auto& [u, v] : kept_pairs)
            key.push_back(ts.basis[i].entry(u) < ts.basis[i].entry(v) ? 1 : 0);
        groups[key].push_back(static_cast<int>(i));
    }
    EquivalencePartition part;
    part.removed = s;
    for (auto& [key, members] : groups) {
        part.representative.push_back(members.front());
        part.classes.push_back(std::move(members));
    }
    // deterministic order: by least member
    std::vector<size_t> order(part.classes.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return part.classes[a].front() < part.classes[b].front();
    });
    EquivalencePartition sorted;
    sorted.removed = s;
    for (size_t i : order) {
        sorted.classes.push_back(part.classes[i]);
        sorted.representative.push_back(part.representative[i]);
    }
    return sorted;
}

// Direct empirical check of the row identity: within every class all matrix
// rows must agree entry-wise.
inline bool verify_row_identity(const TransferSystem& ts, const EquivalencePartition& part) {
    size_t covered = 0;
    for (const auto& cls : part.classes) {
        for (int i : cls) {
            if (i < 0 || static_cast<size_t>(i) >= ts.dim())
                fail(errc::dimension_mismatch, "class member outside the basis");
            ++covered;
            if (ts.matrix[static_cast<size_t>(i)] !=
                ts.matrix[static_cast<size_t>(cls.front())])
                return false;
        }
    }
    if (covered != ts.dim()) fail(errc::dimension_mismatch, "classes do not cover the basis");
    return true;
}

// Lumped system over the classes. Since rows inside a class are identical,
// the state vector is constant on classes from the step after n0 onward,
// so per-class values evolve by the class-column sums of a representative
// row, and the all-ones output functional becomes the class sizes. When the
// start vector is already constant on classes the start index is kept;
// otherwise the lumped system starts one step later.
inline TransferSystem compress(const TransferSystem& ts, const EquivalencePartition& part) {
    if (!verify_row_identity(ts, part))
        fail(errc::rows_not_identical, "rows differ inside a class");
    size_t k = part.classes.size();
    TransferSystem out;
    out.period = ts.period;
    out.w = ts.w;
    out.geom = ts.geom;
    for (size_t c = 0; c < k; ++c)
        out.basis.push_back(ts.basis[static_cast<size_t>(part.representative[c])]);
    out.matrix.assign(k, Vector(k));
    for (size_t c1 = 0; c1 < k; ++c1) {
        const auto& rep_row = ts.matrix[static_cast<size_t>(part.representative[c1])];
        for (size_t c2 = 0; c2 < k; ++c2)
            for (int j : part.classes[c2]) out.matrix[c1][c2] += rep_row[static_cast<size_t>(j)];
    }
    out.weights.assign(k, BigInt());
    for (size_t c = 0; c < k; ++c)
        out.weights[c] = BigInt(static_cast<long long>(part.classes[c].size()));

    bool start_constant = true;
    for (const auto& cls : part.classes)
        for (int j : cls)
            if (ts.v0[static_cast<size_t>(j)] != ts.v0[static_cast<size_t>(cls.front())]) {
                start_constant = false;
                break;
            }
    out.v0.assign(k, BigInt());
    if (start_constant) {
        out.n0 = ts.n0;
        for (size_t c = 0; c < k; ++c)
            out.v0[c] = ts.v0[static_cast<size_t>(part.representative[c])];
    } else {
        out.n0 = ts.n0 + 1;
        Vector next = mat_vec(ts.matrix, ts.v0);
        for (size_t c = 0; c < k; ++c)
            out.v0[c] = next[static_cast<size_t>(part.representative[c])];
    }
    return out;
}

// Redundant subsets among the candidate family: the empty set, every suffix
// of the index shape's bottom row, and every subset when the index shape is
// small enough to scan exhaustively. Sorted by class count, then size, then
// cells.
inline std::vector<RedundantSubset> find_redundant_subsets(const TransferSystem& ts,
                                                           size_t exhaustive_budget = 12) {
    std::vector<Shape> candidates;
    candidates.push_back(Shape{});
    auto bottom = ts.geom.index.row_cells(ts.geom.index.max_row());
    for (size_t len = 1; len <= bottom.size(); ++len)
        candidates.emplace_back(
            std::vector<Cell>(bottom.end() - static_cast<long>(len), bottom.end()));
    if (ts.geom.index.size() <= exhaustive_budget) {
        size_t n = ts.geom.index.size();
        for (uint64_t mask = 1; mask < (1ull << n); ++mask) {
            std::vector<Cell> cells;
            for (size_t i = 0; i < n; ++i)
                if (mask & (1ull << i)) cells.push_back(ts.geom.index.cell(i));
            candidates.emplace_back(std::move(cells));
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<RedundantSubset> out;
    for (const auto& cand : candidates) {
        auto check = check_redundant_subset(ts.period, ts.w, cand, ts.geom);
        if (!check) continue;
        RedundantSubset r;
        r.cells = cand;
        r.class_count = equivalence_partition(ts, cand).classes.size();
        out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [](const RedundantSubset& a, const RedundantSubset& b) {
        if (a.class_count != b.class_count) return a.class_count < b.class_count;
        if (a.cells.size() != b.cells.size()) return a.cells.size() < b.cells.size();
        return a.cells < b.cells;
    });
    return out;
}

} // namespace syt
