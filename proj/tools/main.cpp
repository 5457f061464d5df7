// Command-line front end: validates period specs, counts fillings directly
// and through the transfer system, derives recurrences, exports posets, and
// regression-checks the bundled reference data.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "syt/pipeline.hpp"

using namespace syt;

namespace {

const auto g_started = std::chrono::steady_clock::now();

struct CommonArgs {
    std::string spec_path;
    int w = -1;
    bool as_json = false;
    size_t limit_cells = 22;
    size_t max_dim = 200;
    size_t max_poset = 5000;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--spec", args.spec_path, "shape or pair spec file (JSON)")->required();
    cmd->add_option("--w", args.w, "shift number (overrides the spec file)");
    cmd->add_flag("--json", args.as_json, "machine-readable output");
    cmd->add_option("--limit-cells", args.limit_cells, "enumeration cell limit");
    cmd->add_option("--max-dim", args.max_dim, "transfer dimension limit");
    cmd->add_option("--max-poset", args.max_poset, "poset size limit");
}

PipelineOptions options_of(const CommonArgs& args) {
    PipelineOptions opt;
    opt.brute_cells = args.limit_cells;
    opt.transfer.max_cells = std::max<size_t>(args.limit_cells, 32);
    opt.transfer.max_dim = args.max_dim;
    opt.poset_max = args.max_poset;
    return opt;
}

json load_spec(const CommonArgs& args) {
    std::ifstream in(args.spec_path);
    if (!in) fail(errc::parse_error, "cannot open spec file " + args.spec_path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail(errc::parse_error, std::string("spec file is not valid JSON: ") + e.what());
    }
    return j;
}

int spec_w(const CommonArgs& args, const json& spec) {
    if (args.w >= 0) return args.w;
    return w_from_spec_json(spec);
}

int exit_code_for(const error& e) {
    switch (e.code()) {
        case errc::shape_too_large:
        case errc::too_many_tableaux:
        case errc::enumeration_limit_exceeded:
            return 2;
        case errc::internal_inconsistency:
            return 3;
        default:
            return 1;
    }
}

// JSON output is deterministic for identical inputs except for timing_ms,
// which callers must drop before hashing.
void emit(const json& report, const CommonArgs& args, const std::string& text) {
    if (args.as_json) {
        json out = report;
        out["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - g_started)
                               .count();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

std::string render_count(const json& report) {
    std::string out = "n";
    bool brute = report.at("table").size() && report.at("table")[0].contains("brute");
    bool via = report.at("table").size() && report.at("table")[0].contains("transfer");
    if (brute) out += "\tdirect";
    if (via) out += "\ttransfer";
    if (report.contains("all_equal")) out += "\tequal";
    out += "\n";
    auto cell_str = [](const json& v) {
        if (v.is_null()) return std::string("-");
        if (v.is_string()) return v.get<std::string>();
        return v.dump();
    };
    for (const auto& row : report.at("table")) {
        out += std::to_string(row.at("n").get<int>());
        if (brute) out += "\t" + cell_str(row.at("brute"));
        if (via) out += "\t" + cell_str(row.at("transfer"));
        if (row.contains("equal"))
            out += std::string("\t") + (row.at("equal").get<bool>() ? "yes" : "NO");
        out += "\n";
    }
    if (report.contains("all_equal"))
        out += std::string("all equal: ") + (report.at("all_equal").get<bool>() ? "yes" : "NO") +
               "\n";
    return out;
}

std::string render_coeffs(const json& arr) {
    std::string out = "(";
    for (size_t i = 0; i < arr.size(); ++i) {
        if (i) out += ", ";
        out += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
    }
    return out + ")";
}

Shape row_shape(int len) {
    std::vector<Cell> cells;
    for (int c = 1; c <= len; ++c) cells.push_back({1, c});
    return Shape(std::move(cells));
}

bool matrix_equals(const Matrix& m, const json& expect) {
    if (m.size() != expect.size()) return false;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != expect[i].size()) return false;
        for (size_t j = 0; j < m[i].size(); ++j)
            if (m[i][j] != bigint_from_json(expect[i][j])) return false;
    }
    return true;
}

bool poly_equals(const IntPolynomial& p, const json& expect) {
    if (p.coeffs.size() != expect.size()) return false;
    for (size_t i = 0; i < p.coeffs.size(); ++i)
        if (p.coeffs[i] != bigint_from_json(expect[i])) return false;
    return true;
}

int run_fixtures(const std::string& data_path) {
    std::ifstream in(data_path);
    if (!in) {
        std::cerr << "cannot open reference data " << data_path << "\n";
        return 1;
    }
    json data;
    in >> data;
    int failures = 0;
    auto report = [&](const std::string& name, bool ok) {
        std::cout << "fixture " << name << ": " << (ok ? "PASS" : "FAIL") << "\n";
        if (!ok) ++failures;
    };

    for (const auto& fx : data.at("transfer_matrices")) {
        auto p = validate_periodic(row_shape(fx.at("row_length").get<int>()));
        auto ts = build_transfer_system(p, fx.at("w").get<int>());
        report(fx.at("name").get<std::string>() + " matrix",
               matrix_equals(ts.matrix, fx.at("matrix")));
        report(fx.at("name").get<std::string>() + " charpoly",
               poly_equals(char_poly(ts.matrix), fx.at("charpoly")));
    }

    {
        const auto& fx = data.at("large_system");
        auto p = validate_periodic(row_shape(fx.at("row_length").get<int>()));
        auto ts = build_transfer_system(p, fx.at("w").get<int>());
        report("large system dimension", ts.dim() == fx.at("dim").get<size_t>());
        auto chi = char_poly(ts.matrix);
        bool head_ok = chi.coeffs.size() == ts.dim() + 1;
        const auto& lead = fx.at("charpoly_leading");
        for (size_t i = 0; i < lead.size() && head_ok; ++i)
            head_ok = chi.coeffs[i] == bigint_from_json(lead[i]);
        for (size_t i = lead.size(); i < chi.coeffs.size() && head_ok; ++i)
            head_ok = chi.coeffs[i].is_zero();
        report("large system charpoly", head_ok);
    }

    {
        const auto& fx = data.at("source_sink");
        Shape s = shape_from_cells_json(fx.at("shape"));
        report("source filling", source_tableau(s) == tableau_from_json(fx.at("source")));
        report("sink filling", sink_tableau(s) == tableau_from_json(fx.at("sink")));
    }

    for (const auto& fx : data.at("column_words")) {
        Tableau t = tableau_from_json(fx.at("tableau"));
        report(fx.at("name").get<std::string>(),
               column_word(t) == fx.at("word").get<std::vector<int>>());
    }

    if (failures) {
        std::cerr << failures << " fixture(s) failed\n";
        return 3;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact counting of standard fillings of periodic shapes"};
    app.require_subcommand(1);

    CommonArgs shape_args, count_args, transfer_args, rec_args, poset_args;
    std::string count_range = "1:6", count_method = "both";
    int rec_terms = 0;
    bool rec_compress = false;
    std::string poset_dot_path, fixtures_data = "data/fixtures.json";

    auto* cmd_shape = app.add_subcommand("shape-check", "validate a period and its shift");
    add_common(cmd_shape, shape_args);

    auto* cmd_count = app.add_subcommand("count", "count fillings of shifted unions");
    add_common(cmd_count, count_args);
    cmd_count->add_option("--n", count_range, "copy count or range a:b");
    cmd_count->add_option("--method", count_method, "brute | transfer | both")
        ->check(CLI::IsMember({"brute", "transfer", "both"}));

    auto* cmd_transfer = app.add_subcommand("transfer", "build and print the transfer system");
    add_common(cmd_transfer, transfer_args);

    auto* cmd_rec = app.add_subcommand("recurrence", "derive and verify counting recurrences");
    add_common(cmd_rec, rec_args);
    cmd_rec->add_option("--terms", rec_terms, "number of generated sequence terms");
    cmd_rec->add_flag("--compress", rec_compress, "also report the best compressed system");

    auto* cmd_poset = app.add_subcommand("poset", "export the cover digraph of a shape's fillings");
    add_common(cmd_poset, poset_args);
    cmd_poset->add_option("--dot", poset_dot_path, "write the DOT digraph to this file");

    auto* cmd_fixtures =
        app.add_subcommand("fixtures", "regression-compare bundled reference data");
    cmd_fixtures->add_option("--data", fixtures_data, "reference data file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_shape->parsed()) {
            json spec = load_spec(shape_args);
            Shape raw = shape_from_spec_json(spec);
            int w = shape_args.w >= 0 ? shape_args.w : w_from_spec_json(spec, 0);
            json report = shape_check_report(raw, w, options_of(shape_args));
            std::string text;
            if (!report.at("valid").get<bool>()) {
                text = "invalid: " + report.at("condition").get<std::string>() + "\n";
                emit(report, shape_args, text);
                return 1;
            }
            text += "valid period; a=" + report.at("a").dump() + " b=" + report.at("b").dump() +
                    " shift=" + report.at("shift_vector").dump() + "\n";
            text += report.at("ascii").at("period").get<std::string>();
            if (report.at("compatible").get<bool>()) {
                text += "compatible with w=" + std::to_string(w) +
                        "; n0=" + report.at("n0").dump() + ", dim=" + report.at("dim").dump() +
                        "\n";
                text += "two copies:\n" + report.at("ascii").at("two_copies").get<std::string>();
                text += "index shape:\n" + report.at("ascii").at("index").get<std::string>();
                text +=
                    "coefficient shape:\n" + report.at("ascii").at("coefficient").get<std::string>();
            } else {
                text += "incompatible with w=" + std::to_string(w) + ": " +
                        report.at("reason").get<std::string>() + "\n";
            }
            emit(report, shape_args, text);
            return report.at("compatible").get<bool>() ? 0 : 1;
        }

        if (cmd_count->parsed()) {
            json spec = load_spec(count_args);
            auto p = validate_periodic(shape_from_spec_json(spec));
            int w = spec_w(count_args, spec);
            int n_from = 1, n_to = 1;
            auto colon = count_range.find(':');
            if (colon == std::string::npos) {
                n_from = n_to = std::stoi(count_range);
            } else {
                n_from = std::stoi(count_range.substr(0, colon));
                n_to = std::stoi(count_range.substr(colon + 1));
            }
            if (n_from < 1 || n_to < n_from) fail(errc::parse_error, "bad copy range");
            auto compat = is_compatible(p, w);
            if (count_method != "brute" && !compat) fail(errc::not_compatible, compat.reason);
            json report = count_report(p, w, n_from, n_to, count_method, options_of(count_args));
            emit(report, count_args, render_count(report));
            if (report.contains("all_equal") && !report.at("all_equal").get<bool>()) {
                std::cerr << "oracle mismatch: transfer and direct counts differ\n";
                return 3;
            }
            return 0;
        }

        if (cmd_transfer->parsed()) {
            json spec = load_spec(transfer_args);
            auto p = validate_periodic(shape_from_spec_json(spec));
            int w = spec_w(transfer_args, spec);
            json report = transfer_report(p, w, options_of(transfer_args));
            std::string text = "dim=" + report.at("dim").dump() + " n0=" + report.at("n0").dump() +
                               "\n" + report.at("matrix_grid").get<std::string>();
            emit(report, transfer_args, text);
            return 0;
        }

        if (cmd_rec->parsed()) {
            json spec = load_spec(rec_args);
            auto p = validate_periodic(shape_from_spec_json(spec));
            int w = spec_w(rec_args, spec);
            PipelineOptions opt = options_of(rec_args);
            opt.terms = rec_terms;
            json report = recurrence_report(p, w, opt, rec_compress);
            std::string text;
            text += "dim=" + report.at("dim").dump() + " n0=" + report.at("n0").dump() + "\n";
            text += "charpoly coefficients (high to low): " + render_coeffs(report.at("charpoly")) +
                    "\n";
            text += "recurrence coefficients: " + render_coeffs(report.at("reduced_coeffs")) +
                    ", trailing zeros: " + report.at("recurrence").at("trailing_zeros").dump() +
                    "\n";
            text += "valid from n=" + report.at("recurrence").at("valid_from").dump() +
                    " (dimension bound: n=" + report.at("valid_from_dimension_bound").dump() +
                    ")\n";
            text += std::string("verified against generated terms: full=") +
                    (report.at("verified").at("full_order").get<bool>() ? "yes" : "NO") +
                    " reduced=" +
                    (report.at("verified").at("reduced").get<bool>() ? "yes" : "NO") + "\n";
            if (!report.at("detected").is_null()) {
                text += "detected minimal recurrence: order " +
                        report.at("detected").at("order").dump() + ", coefficients " +
                        render_coeffs(report.at("detected").at("coeffs")) + "\n";
            }
            if (report.contains("compress")) {
                const auto& c = report.at("compress");
                text += "compression: dim_s=" + c.at("dim_s").dump() +
                        " subset=" + c.at("subset").dump() + "\n";
                text += std::string("  rows identical: ") +
                        (c.at("rows_identical").get<bool>() ? "yes" : "NO") +
                        ", sequence preserved: " +
                        (c.at("terms_match").get<bool>() ? "yes" : "NO") + "\n";
                text += "  compressed recurrence: " +
                        render_coeffs(c.at("compressed_recurrence").at("coeffs")) + "\n";
            }
            emit(report, rec_args, text);
            bool ok = report.at("verified").at("full_order").get<bool>() &&
                      report.at("verified").at("reduced").get<bool>();
            if (report.contains("compress"))
                ok = ok && report.at("compress").at("terms_match").get<bool>();
            if (!ok) {
                std::cerr << "verification failed: derived recurrence does not reproduce terms\n";
                return 3;
            }
            return 0;
        }

        if (cmd_poset->parsed()) {
            json spec = load_spec(poset_args);
            Shape s = shape_from_spec_json(spec);
            json report = poset_report(s, options_of(poset_args));
            if (!poset_dot_path.empty()) {
                std::ofstream out(poset_dot_path);
                out << report.at("dot").get<std::string>();
            }
            std::string text = "fillings: " + report.at("size").dump() +
                               ", covers: " + report.at("cover_count").dump() + "\n" +
                               "source word: " + report.at("source_word").get<std::string>() +
                               "\nsink word:   " + report.at("sink_word").get<std::string>() +
                               "\n";
            if (poset_dot_path.empty() && !poset_args.as_json)
                text += report.at("dot").get<std::string>();
            emit(report, poset_args, text);
            return 0;
        }

        if (cmd_fixtures->parsed()) return run_fixtures(fixtures_data);
    } catch (const error& e) {
        std::cerr << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
