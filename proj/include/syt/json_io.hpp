#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "syt/recurrences.hpp"
#include "syt/symmetry.hpp"
#include "syt/transfer.hpp"

namespace syt {

using nlohmann::json;

// Big values are emitted as decimal strings once they stop fitting a JSON
// number exactly; readers accept both forms.
inline json bigint_to_json(const BigInt& v) {
    if (v.fits_int64()) {
        long long x = v.to_int64();
        if (x <= (1ll << 53) && x >= -(1ll << 53)) return json(x);
    }
    return json(v.to_string());
}

inline BigInt bigint_from_json(const json& j) {
    if (j.is_number_integer()) return BigInt(j.get<long long>());
    if (j.is_string()) return BigInt::from_string(j.get<std::string>());
    fail(errc::parse_error, "expected integer or decimal string");
}

inline json shape_to_json(const Shape& s) {
    json cells = json::array();
    for (Cell c : s.cells()) cells.push_back({c.row, c.col});
    return json{{"cells", cells}};
}

inline Shape shape_from_cells_json(const json& cells) {
    if (!cells.is_array()) fail(errc::parse_error, "\"cells\" must be an array of [row, col]");
    std::vector<Cell> v;
    for (const auto& e : cells) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            fail(errc::parse_error, "cell entries must be [row, col] integer pairs");
        v.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return Shape(std::move(v));
}

// Accepts {"cells": [[i,j],...]} or {"lambda": [...], "mu": [...]}; a pair
// spec adds "w".
inline Shape shape_from_spec_json(const json& j) {
    if (!j.is_object()) fail(errc::parse_error, "shape spec must be a JSON object");
    if (j.contains("cells")) return shape_from_cells_json(j.at("cells"));
    if (j.contains("lambda")) {
        std::vector<int> lambda, mu;
        for (const auto& e : j.at("lambda")) lambda.push_back(e.get<int>());
        if (j.contains("mu"))
            for (const auto& e : j.at("mu")) mu.push_back(e.get<int>());
        return from_skew(lambda, mu);
    }
    fail(errc::parse_error, "shape spec needs \"cells\" or \"lambda\"/\"mu\"");
}

inline int w_from_spec_json(const json& j, int fallback = -1) {
    if (j.is_object() && j.contains("w")) {
        if (!j.at("w").is_number_integer() || j.at("w").get<int>() < 0)
            fail(errc::parse_error, "\"w\" must be a nonnegative integer");
        return j.at("w").get<int>();
    }
    if (fallback < 0) fail(errc::parse_error, "missing shift number \"w\"");
    return fallback;
}

inline json tableau_to_json(const Tableau& t) {
    json shape = json::array(), entries = json::array();
    for (size_t i = 0; i < t.shape.size(); ++i) {
        Cell c = t.shape.cell(i);
        shape.push_back({c.row, c.col});
        entries.push_back({c.row, c.col, t.values[i]});
    }
    return json{{"shape", shape}, {"entries", entries}};
}

inline Tableau tableau_from_json(const json& j) {
    Tableau t;
    t.shape = shape_from_cells_json(j.at("shape"));
    t.values.assign(t.shape.size(), 0);
    for (const auto& e : j.at("entries")) {
        if (!e.is_array() || e.size() != 3) fail(errc::parse_error, "entries are [row, col, value]");
        int idx = t.shape.index_of({e[0].get<int>(), e[1].get<int>()});
        if (idx < 0) fail(errc::parse_error, "entry cell not in shape");
        t.values[static_cast<size_t>(idx)] = e[2].get<int>();
    }
    return t;
}

inline json transfer_to_json(const TransferSystem& ts) {
    json basis = json::array();
    for (const auto& b : ts.basis) basis.push_back(word_string(column_word(b)));
    json matrix = json::array();
    for (const auto& row : ts.matrix) {
        json r = json::array();
        for (const auto& e : row) r.push_back(bigint_to_json(e));
        matrix.push_back(r);
    }
    json v0 = json::array();
    for (const auto& e : ts.v0) v0.push_back(bigint_to_json(e));
    json weights = json::array();
    for (const auto& e : ts.weights) weights.push_back(bigint_to_json(e));
    return json{{"dim", ts.dim()}, {"n0", ts.n0},      {"basis", basis},
                {"matrix", matrix}, {"v0", v0},        {"weights", weights}};
}

inline json polynomial_to_json(const IntPolynomial& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs) coeffs.push_back(bigint_to_json(c));
    return coeffs;
}

inline json recurrence_to_json(const Recurrence& r) {
    json coeffs = json::array();
    for (const auto& c : r.coeffs) coeffs.push_back(bigint_to_json(c));
    return json{{"order", r.order},
                {"coeffs", coeffs},
                {"trailing_zeros", r.trailing_zeros},
                {"valid_from", r.valid_from}};
}

inline json partition_to_json(const EquivalencePartition& part) {
    json cells = json::array();
    for (Cell c : part.removed.cells()) cells.push_back({c.row, c.col});
    json classes = json::array();
    for (const auto& cls : part.classes) classes.push_back(cls);
    return json{{"subset", cells}, {"classes", classes}, {"dim_s", part.classes.size()}};
}

inline std::string matrix_grid(const Matrix& m) {
    std::vector<std::vector<std::string>> cells;
    size_t width = 1;
    for (const auto& row : m) {
        cells.emplace_back();
        for (const auto& e : row) {
            cells.back().push_back(e.to_string());
            width = std::max(width, cells.back().back().size());
        }
    }
    std::string out;
    for (const auto& row : cells) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) out += ' ';
            out += std::string(width - row[j].size(), ' ') + row[j];
        }
        out += '\n';
    }
    return out;
}

} // namespace syt
