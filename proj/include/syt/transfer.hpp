#pragma once

#include <map>
#include <vector>

#include "syt/matrix.hpp"
#include "syt/periodic.hpp"
#include "syt/tableau.hpp"

namespace syt {

struct TransferLimits {
    size_t max_cells = 32;  // largest shape whose fillings get enumerated
    size_t max_dim = 200;
};

// State-evolution system for the counting sequence of a compatible pair.
// `basis` lists the boundary states in ascending column-word order; row r,
// column c of `matrix` counts coefficient-shape fillings whose bottom state
// is basis[r] and top state basis[c], so states evolve by left multiplication.
// `weights` is all ones for directly built systems; compression replaces it
// by class sizes.
struct TransferSystem {
    PeriodicShape period;
    int w = 0;
    IndexShapes geom;
    std::vector<Tableau> basis;
    Matrix matrix;
    Vector v0;
    Vector weights;
    int n0 = 1;

    size_t dim() const { return basis.size(); }
};

namespace detail {

inline int basis_lookup(const std::map<std::vector<int>, int>& index, const Tableau& t,
                        const char* what) {
    auto it = index.find(t.values);
    if (it == index.end())
        fail(errc::internal_inconsistency, std::string("restriction is not a basis state: ") + what);
    return it->second;
}

} // namespace detail

// Restriction of a coefficient-shape filling to the top boundary copy,
// re-ranked to a filling of the index shape.
inline Tableau top_index_subtableau(const Tableau& t, const IndexShapes& geom) {
    if (t.shape != geom.coefficient)
        fail(errc::not_on_coefficient_shape, "tableau is not on the coefficient shape");
    return restricted_pattern(t, geom.index.translated(geom.t_top), geom.t_top);
}

inline Tableau bottom_index_subtableau(const Tableau& t, const IndexShapes& geom) {
    if (t.shape != geom.coefficient)
        fail(errc::not_on_coefficient_shape, "tableau is not on the coefficient shape");
    return restricted_pattern(t, geom.index.translated(geom.t_bot), geom.t_bot);
}

// Restriction of a shifted-union filling to the anchored boundary copy at
// its bottom-right. The union must span at least n0 copies.
inline Tableau index_subtableau(const Tableau& t, const TransferSystem& ts) {
    size_t cells = ts.period.shape.size();
    if (t.shape.size() % cells != 0)
        fail(errc::shape_too_small, "tableau is not on a shifted union of the period");
    int m = static_cast<int>(t.shape.size() / cells);
    if (m < ts.n0) fail(errc::shape_too_small, "union has fewer copies than the start index");
    if (t.shape != generate_shifted(ts.period, ts.w, m))
        fail(errc::shape_too_small, "tableau is not on the expected shifted union");
    Cell anchor = index_anchor(ts.period, ts.geom, m);
    return restricted_pattern(t, ts.geom.index.translated(anchor), anchor);
}

inline TransferSystem build_transfer_system(const PeriodicShape& p, int w,
                                            const TransferLimits& limits = {}) {
    auto compat = is_compatible(p, w);
    if (!compat) fail(errc::not_compatible, compat.reason);

    TransferSystem ts;
    ts.period = p;
    ts.w = w;
    ts.geom = index_shapes(p, w);
    ts.n0 = n_min(p, w, ts.geom);

    if (ts.geom.index.size() > limits.max_cells ||
        ts.geom.coefficient.size() > limits.max_cells)
        fail(errc::enumeration_limit_exceeded, "boundary shapes exceed the enumeration limit");
    Shape base = generate_shifted(p, w, ts.n0);
    if (base.size() > limits.max_cells)
        fail(errc::enumeration_limit_exceeded, "start union exceeds the enumeration limit");

    ts.basis = enumerate_syt(ts.geom.index, limits.max_cells);
    if (ts.basis.size() > limits.max_dim)
        fail(errc::enumeration_limit_exceeded, "basis exceeds the dimension limit");
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < ts.basis.size(); ++i)
        index[ts.basis[i].values] = static_cast<int>(i);

    size_t dim = ts.basis.size();
    ts.matrix.assign(dim, Vector(dim));
    Shape top_region = ts.geom.index.translated(ts.geom.t_top);
    Shape bot_region = ts.geom.index.translated(ts.geom.t_bot);
    enumerate_syt_visit(ts.geom.coefficient, [&](const Tableau& t) {
        int c = detail::basis_lookup(index, restricted_pattern(t, top_region, ts.geom.t_top),
                                     "top boundary");
        int r = detail::basis_lookup(index, restricted_pattern(t, bot_region, ts.geom.t_bot),
                                     "bottom boundary");
        ts.matrix[static_cast<size_t>(r)][static_cast<size_t>(c)] += BigInt(1);
    });

    ts.v0.assign(dim, BigInt());
    Cell anchor = index_anchor(p, ts.geom, ts.n0);
    Shape base_region = ts.geom.index.translated(anchor);
    enumerate_syt_visit(base, [&](const Tableau& t) {
        int r = detail::basis_lookup(index, restricted_pattern(t, base_region, anchor),
                                     "start boundary");
        ts.v0[static_cast<size_t>(r)] += BigInt(1);
    });

    BigInt total;
    for (const auto& v : ts.v0) total += v;
    if (total != count_syt(base))
        fail(errc::internal_inconsistency, "start vector does not sum to the start count");

    ts.weights.assign(dim, BigInt(1));
    return ts;
}

// weights^T . M^(n-n0) . v0, exact.
inline BigInt count_via_transfer(const TransferSystem& ts, int n) {
    if (n < ts.n0)
        fail(errc::below_range, "n below the start index; count the shape directly instead");
    Matrix p = mat_pow(ts.matrix, static_cast<unsigned long long>(n - ts.n0));
    return dot(ts.weights, mat_vec(p, ts.v0));
}

} // namespace syt
