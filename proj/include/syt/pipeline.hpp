#pragma once

#include <string>

#include "syt/json_io.hpp"
#include "syt/recurrences.hpp"
#include "syt/symmetry.hpp"

namespace syt {

struct PipelineOptions {
    TransferLimits transfer;
    size_t brute_cells = 22;        // cap for explicit enumeration paths
    size_t poset_max = 5000;
    size_t exhaustive_budget = 12;  // subset search switches to all subsets below this
    int terms = 0;                  // 0: derived from the system dimension
};

inline json cell_json(Cell c) { return json{c.row, c.col}; }

// Validity, anchors, shift data, compatibility verdict and boundary shapes
// of a candidate period.
inline json shape_check_report(const Shape& raw, int w, const PipelineOptions& opt = {}) {
    json report;
    report["command"] = "shape-check";
    report["cells"] = shape_to_json(raw).at("cells");
    report["w"] = w;
    PeriodicShape p;
    try {
        p = validate_periodic(raw);
    } catch (const error& e) {
        report["valid"] = false;
        report["condition"] = e.what();
        return report;
    }
    report["valid"] = true;
    report["a"] = cell_json(p.a);
    report["b"] = cell_json(p.b);
    report["shift_vector"] = cell_json(shift_vector(p, w));
    report["ascii"]["period"] = p.shape.ascii();
    auto compat = is_compatible(p, w);
    report["compatible"] = compat.compatible;
    if (!compat) {
        report["reason"] = compat.reason;
        return report;
    }
    report["ascii"]["two_copies"] = generate_shifted(p, w, 2).ascii();
    auto geom = index_shapes(p, w);
    report["index_shape"] = shape_to_json(geom.index).at("cells");
    report["coefficient_shape"] = shape_to_json(geom.coefficient).at("cells");
    report["ascii"]["index"] = geom.index.ascii();
    report["ascii"]["coefficient"] = geom.coefficient.ascii();
    report["n0"] = n_min(p, w, geom);
    report["dim"] = bigint_to_json(count_syt(geom.index));
    (void)opt;
    return report;
}

// Counting table over a range of copy counts, by direct counting, the
// transfer system, or both with per-n verdicts.
inline json count_report(const PeriodicShape& p, int w, int n_from, int n_to,
                         const std::string& method, const PipelineOptions& opt = {}) {
    json report;
    report["command"] = "count";
    report["w"] = w;
    report["method"] = method;
    bool want_brute = method == "brute" || method == "both";
    bool want_transfer = method == "transfer" || method == "both";
    TransferSystem ts;
    if (want_transfer) {
        ts = build_transfer_system(p, w, opt.transfer);
        report["n0"] = ts.n0;
        report["dim"] = ts.dim();
    }
    json rows = json::array();
    bool all_equal = true;
    for (int n = n_from; n <= n_to; ++n) {
        json row;
        row["n"] = n;
        BigInt brute, via;
        if (want_brute) {
            Shape s = generate_shifted(p, w, n);
            brute = count_syt(s);
            row["brute"] = bigint_to_json(brute);
        }
        if (want_transfer) {
            if (n < ts.n0) {
                if (method == "transfer")
                    fail(errc::below_range,
                         "n=" + std::to_string(n) + " is below the start index " +
                             std::to_string(ts.n0) + "; use --method brute for small n");
                row["transfer"] = nullptr;
            } else {
                via = count_via_transfer(ts, n);
                row["transfer"] = bigint_to_json(via);
            }
        }
        if (method == "both" && !row["transfer"].is_null()) {
            bool equal = brute == via;
            row["equal"] = equal;
            all_equal = all_equal && equal;
        }
        rows.push_back(row);
    }
    report["table"] = rows;
    if (method == "both") report["all_equal"] = all_equal;
    return report;
}

inline json transfer_report(const PeriodicShape& p, int w, const PipelineOptions& opt = {}) {
    json report;
    report["command"] = "transfer";
    auto ts = build_transfer_system(p, w, opt.transfer);
    report["system"] = transfer_to_json(ts);
    report["matrix_grid"] = matrix_grid(ts.matrix);
    report["n0"] = ts.n0;
    report["dim"] = ts.dim();
    return report;
}

namespace detail {

inline std::vector<BigInt> system_terms(const TransferSystem& ts, int count) {
    std::vector<BigInt> terms;
    Vector v = ts.v0;
    for (int k = 0; k < count; ++k) {
        terms.push_back(dot(ts.weights, v));
        v = mat_vec(ts.matrix, v);
    }
    return terms;
}

} // namespace detail

// Characteristic polynomial, the induced recurrence with its reduced form,
// the independently detected shortest recurrence, verification verdicts, and
// optionally the best compressed system.
inline json recurrence_report(const PeriodicShape& p, int w, const PipelineOptions& opt = {},
                              bool with_compress = false) {
    json report;
    report["command"] = "recurrence";
    report["w"] = w;
    auto ts = build_transfer_system(p, w, opt.transfer);
    report["n0"] = ts.n0;
    report["dim"] = ts.dim();

    auto chi = char_poly(ts.matrix);
    report["charpoly"] = polynomial_to_json(chi);

    Recurrence full = recurrence_from_charpoly(chi, 0);
    full.valid_from = ts.n0 + full.effective_order();
    report["recurrence"] = recurrence_to_json(full);
    json reduced = json::array();
    for (const auto& c : reduced_coeffs(full)) reduced.push_back(bigint_to_json(c));
    report["reduced_coeffs"] = reduced;
    // order bound guaranteed by the matrix dimension, surfaced next to the
    // empirically confirmed start of the reduced window
    report["valid_from_dimension_bound"] = ts.n0 + static_cast<long long>(ts.dim());

    int term_count = opt.terms > 0 ? opt.terms : static_cast<int>(ts.dim()) + 22;
    term_count = std::max(term_count, full.effective_order() + 21);
    auto terms = detail::system_terms(ts, term_count);
    json jterms = json::array();
    for (const auto& t : terms) jterms.push_back(bigint_to_json(t));
    report["terms"] = jterms;

    Recurrence reduced_rec;
    reduced_rec.order = full.effective_order();
    reduced_rec.coeffs = reduced_coeffs(full);
    reduced_rec.valid_from = ts.n0 + reduced_rec.order;
    report["verified"]["full_order"] = verify_recurrence(full, terms, ts.n0);
    report["verified"]["reduced"] = verify_recurrence(reduced_rec, terms, ts.n0);

    auto detected = minimal_recurrence(terms, ts.n0);
    if (detected) {
        report["detected"] = recurrence_to_json(*detected);
        report["verified"]["detected"] = verify_recurrence(*detected, terms, ts.n0);
    } else {
        report["detected"] = nullptr;
    }

    if (with_compress) {
        auto found = find_redundant_subsets(ts, opt.exhaustive_budget);
        const auto& best = found.front();
        auto part = equivalence_partition(ts, best.cells);
        json cj = partition_to_json(part);
        cj["rows_identical"] = verify_row_identity(ts, part);
        auto packed = compress(ts, part);
        cj["compressed"] = transfer_to_json(packed);
        auto packed_chi = char_poly(packed.matrix);
        cj["compressed_charpoly"] = polynomial_to_json(packed_chi);
        Recurrence packed_rec = recurrence_from_charpoly(packed_chi, 0);
        packed_rec.valid_from = packed.n0 + packed_rec.effective_order();
        cj["compressed_recurrence"] = recurrence_to_json(packed_rec);
        bool match = true;
        for (int n = packed.n0; n < ts.n0 + term_count && n <= packed.n0 + 20; ++n)
            match = match && count_via_transfer(packed, n) == count_via_transfer(ts, n);
        cj["terms_match"] = match;
        report["compress"] = cj;
    }
    return report;
}

inline json poset_report(const Shape& s, const PipelineOptions& opt = {}) {
    json report;
    report["command"] = "poset";
    auto poset = build_syt_poset(s, opt.poset_max, opt.brute_cells);
    report["size"] = poset.elements.size();
    report["cover_count"] = poset.covers.size();
    report["dot"] = poset_to_dot(poset);
    bool min_ok = poset.source_index >= 0 &&
                  poset.elements[static_cast<size_t>(poset.source_index)] == source_tableau(s);
    bool max_ok = poset.sink_index >= 0 &&
                  poset.elements[static_cast<size_t>(poset.sink_index)] == sink_tableau(s);
    report["min_is_source"] = min_ok;
    report["max_is_sink"] = max_ok;
    if (poset.source_index >= 0)
        report["source_word"] =
            word_string(column_word(poset.elements[static_cast<size_t>(poset.source_index)]));
    if (poset.sink_index >= 0)
        report["sink_word"] =
            word_string(column_word(poset.elements[static_cast<size_t>(poset.sink_index)]));
    if (!min_ok || !max_ok)
        fail(errc::internal_inconsistency, "poset extremes disagree with the greedy fillings");
    return report;
}

} // namespace syt
