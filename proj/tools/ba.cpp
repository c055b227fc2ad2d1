// Command-line front end: JSON documents in, JSON documents / reports out.
// Exit codes: 0 success (check: very good; equiv: equivalent), 1 domain
// failure (not very good, not equivalent, zero value, zero q), 2 malformed
// document or incompatible inputs, 3 oracle mismatch or selftest failure.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "ba/ba.hpp"
#include "ba/io.hpp"

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitParse = 2;
constexpr int kExitMismatch = 3;

ba::Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ba::ParseError("cannot read file: " + path);
    try {
        return ba::Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ba::ParseError("invalid JSON in " + path + ": " + e.what());
    }
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ba::ParseError("cannot write file: " + out_path);
    out << text;
}

template <ba::FieldType F>
int run_check(const ba::Matrix<F>& t, const std::string& out_path) {
    std::ostringstream os;
    auto bad_good = ba::first_singular_window(t, true);
    auto bad_very = ba::first_singular_window(t, false);
    if (bad_good)
        os << "not good: window(" << bad_good->first << "," << bad_good->second << ") singular\n";
    else
        os << "good\n";
    if (bad_very)
        os << "not very good: window(" << bad_very->first << "," << bad_very->second << ") singular\n";
    else
        os << "very good\n";
    write_output(os.str(), out_path);
    return bad_very ? kExitDomain : 0;
}

template <ba::FieldType F>
ba::ValueFunction<F> bvalues_by_method(const ba::Matrix<F>& t, const std::string& method) {
    const F& field = t.field();
    int d = t.rows() - 1;
    if (method == "det") return ba::value_function_hat(t);
    std::vector<std::vector<typename F::Element>> table;
    if (method == "brace") {
        table = ba::standard_cba(t).table();
    } else {  // flags: vectors read off the subspace table of the three flags
        auto flags = ba::flags_from_matrix(t);
        if (!ba::is_very_good(t)) throw ba::NotVeryGood();
        ba::SubspaceTable<F> cells = ba::billiard_from_flags(flags[0], flags[1], flags[2]);
        for (const ba::Location& x : ba::locations(d)) {
            const ba::Matrix<F>& basis = cells.at(x).basis();
            std::vector<typename F::Element> v;
            for (int j = 0; j < basis.cols(); ++j) v.push_back(basis(0, j));
            table.push_back(std::move(v));
        }
    }
    std::vector<typename F::Element> values;
    for (const ba::Location& tau : ba::locations(d - 2))
        values.push_back(ba::bvalue_brace_of_table(field, d, table, tau));
    return ba::ValueFunction<F>(field, d - 2, std::move(values));
}

template <ba::FieldType F>
int run_bvalues(const ba::Matrix<F>& t, const std::string& method, const std::string& out_path) {
    int d = t.rows() - 1;
    if (d < 2) {
        std::cerr << "notice: diameter " << d << " has no white cliques; emitting an empty value function\n";
        ba::Json j;
        j["d"] = d - 2;
        j["field"] = ba::field_tag(t.field());
        j["values"] = ba::Json::array();
        write_output(ba::document_text(j), out_path);
        return 0;
    }
    if (method != "all") {
        write_output(ba::document_text(ba::value_function_document(bvalues_by_method(t, method))), out_path);
        return 0;
    }
    ba::ValueFunction<F> by_det = bvalues_by_method(t, "det");
    ba::ValueFunction<F> by_brace = bvalues_by_method(t, "brace");
    ba::ValueFunction<F> by_flags = bvalues_by_method(t, "flags");
    if (!(by_det == by_brace) || !(by_det == by_flags)) {
        std::cerr << "oracle mismatch: det/brace/flags methods disagree\n";
        return kExitMismatch;
    }
    write_output(ba::document_text(ba::value_function_document(by_det)), out_path);
    return 0;
}

struct Options {
    std::string file, file_b, out_path;
    std::string method = "all";
    std::string field_name = "rational";
    std::string q_text;
    int d = -1;
    std::optional<int> render_locations_d;
    int trials = 20;
    std::uint64_t seed = 0;
    bool inject_fault = false;
};

int run_equiv(const Options& opt) {
    ba::AnyMatrix a = ba::parse_matrix_document(load_json(opt.file), true);
    ba::AnyMatrix b = ba::parse_matrix_document(load_json(opt.file_b), true);
    bool equal = std::visit(
        [&](const auto& ma, const auto& mb) -> bool {
            if constexpr (std::is_same_v<std::decay_t<decltype(ma)>, std::decay_t<decltype(mb)>>) {
                if (ma.rows() != mb.rows()) throw ba::ParseError("inputs have different diameters");
                if (ma.field() != mb.field()) throw ba::ParseError("inputs live in different fields");
                return ba::matrices_equivalent(ma, mb);
            } else {
                throw ba::ParseError("inputs live in different fields");
            }
        },
        a, b);
    write_output(equal ? "equivalent\n" : "not equivalent\n", opt.out_path);
    return equal ? 0 : kExitDomain;
}

int run_selftest(const Options& opt) {
    ba::AnyField field = ba::parse_field_name(opt.field_name);
    ba::SelftestOptions st{opt.d < 0 ? 4 : opt.d, opt.trials, opt.seed, opt.inject_fault};
    ba::SelftestResult result =
        std::visit([&](const auto& f) { return ba::run_selftest(f, st); }, field);
    write_output(result.report, opt.out_path);
    return result.ok ? 0 : kExitMismatch;
}

int run_render(const Options& opt) {
    if (opt.render_locations_d) {
        write_output(ba::render_locations(*opt.render_locations_d), opt.out_path);
        return 0;
    }
    ba::Json j = load_json(opt.file);
    if (ba::document_kind(j) == ba::DocumentKind::matrix) {
        ba::AnyMatrix m = ba::parse_matrix_document(j);
        write_output(std::visit([](const auto& t) { return ba::render_matrix_triangle(t); }, m), opt.out_path);
    } else {
        ba::AnyValueFunction vf = ba::parse_value_function_document(j);
        write_output(std::visit([](const auto& f) { return ba::render_value_function(f); }, vf), opt.out_path);
    }
    return 0;
}

int dispatch(const std::string& command, const Options& opt) {
    if (command == "check") {
        ba::AnyMatrix m = ba::parse_matrix_document(load_json(opt.file));
        return std::visit([&](const auto& t) { return run_check(t, opt.out_path); }, m);
    }
    if (command == "bvalues") {
        ba::AnyMatrix m = ba::parse_matrix_document(load_json(opt.file), true);
        return std::visit([&](const auto& t) { return run_bvalues(t, opt.method, opt.out_path); }, m);
    }
    if (command == "nice") {
        ba::AnyMatrix m = ba::parse_matrix_document(load_json(opt.file), true);
        return std::visit(
            [&](const auto& t) {
                write_output(ba::document_text(ba::matrix_document(ba::nice_form(t).matrix)), opt.out_path);
                return 0;
            },
            m);
    }
    if (command == "equiv") return run_equiv(opt);
    if (command == "synth") {
        ba::AnyValueFunction vf = ba::parse_value_function_document(load_json(opt.file));
        return std::visit(
            [&](const auto& f) {
                write_output(ba::document_text(ba::matrix_document(ba::matrix_from_determinants(f))), opt.out_path);
                return 0;
            },
            vf);
    }
    if (command == "from-bvalues") {
        ba::AnyValueFunction vf = ba::parse_value_function_document(load_json(opt.file));
        return std::visit(
            [&](const auto& g) {
                if (opt.d >= 0 && opt.d != g.d() + 2)
                    throw ba::ParseError("--d must equal the input diameter plus 2");
                auto t = ba::matrix_from_determinants(ba::hexagon_ratio_inverse_fine(g));
                write_output(ba::document_text(ba::matrix_document(t)), opt.out_path);
                return 0;
            },
            vf);
    }
    if (command == "qbinom") {
        ba::AnyField field = ba::parse_field_name(opt.field_name);
        return std::visit(
            [&](const auto& f) {
                auto q = f.parse(opt.q_text);
                write_output(ba::document_text(ba::matrix_document(ba::qbinom_matrix(f, opt.d, q))), opt.out_path);
                return 0;
            },
            field);
    }
    if (command == "render") return run_render(opt);
    if (command == "selftest") return run_selftest(opt);
    throw ba::InternalError("unknown command");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for very good triangular matrices, billiard tables and value functions"};
    app.require_subcommand(1);
    Options opt;

    auto* check = app.add_subcommand("check", "report good/very-good verdicts for a matrix document");
    check->add_option("file", opt.file, "matrix document")->required();

    auto* bvalues = app.add_subcommand("bvalues", "B-value table of a very good upper triangular matrix");
    bvalues->add_option("file", opt.file, "matrix document")->required();
    bvalues->add_option("--method", opt.method, "det, brace, flags, or all (cross-checked)")
        ->check(CLI::IsMember({"det", "brace", "flags", "all"}))
        ->capture_default_str();

    auto* nice = app.add_subcommand("nice", "canonical form under two-sided diagonal scaling");
    nice->add_option("file", opt.file, "matrix document")->required();

    auto* equiv = app.add_subcommand("equiv", "decide diagonal-scaling equivalence of two matrices");
    equiv->add_option("file-a", opt.file, "matrix document")->required();
    equiv->add_option("file-b", opt.file_b, "matrix document")->required();

    auto* synth = app.add_subcommand("synth", "matrix with a prescribed window-determinant table");
    synth->add_option("--from-values", opt.file, "value-function document")->required();

    auto* fromb = app.add_subcommand("from-bvalues", "the unique nice matrix with a prescribed B-value table");
    fromb->add_option("file", opt.file, "value-function document on the triangle of diameter d-2")->required();
    fromb->add_option("--d", opt.d, "diameter of the output matrix (input diameter plus 2)");

    auto* qbinom = app.add_subcommand("qbinom", "the q-binomial matrix of a given diameter");
    qbinom->add_option("--d", opt.d, "diameter")->required()->check(CLI::NonNegativeNumber);
    qbinom->add_option("--q", opt.q_text, "nonzero scalar, in the chosen field's text form")->required();
    qbinom->add_option("--field", opt.field_name, "rational or gf:p")->capture_default_str();

    auto* render = app.add_subcommand("render", "triangular picture of a document or of the locations");
    render->add_option("file", opt.file, "matrix or value-function document");
    int loc_d = -1;
    render->add_option("--locations", loc_d, "render the locations of the triangle of this diameter");

    auto* selftest = app.add_subcommand("selftest", "seeded cross-oracle and round-trip invariant suite");
    selftest->add_option("--d", opt.d, "largest diameter to exercise")->capture_default_str();
    selftest->add_option("--field", opt.field_name, "rational or gf:p")->capture_default_str();
    selftest->add_option("--trials", opt.trials, "number of random instances")->capture_default_str();
    selftest->add_option("--seed", opt.seed, "RNG seed")->capture_default_str();
    selftest->add_flag("--inject-fault", opt.inject_fault,
                       "corrupt one oracle comparison (harness sensitivity probe)");

    for (auto* cmd : {check, bvalues, nice, equiv, synth, fromb, qbinom, render, selftest})
        cmd->add_option("--output", opt.out_path, "write to this path instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (render->parsed()) {
        if (loc_d >= 0) opt.render_locations_d = loc_d;
        if (!opt.render_locations_d && opt.file.empty()) {
            std::cerr << "render needs a file or --locations\n";
            return kExitParse;
        }
    }

    try {
        return dispatch(app.get_subcommands().front()->get_name(), opt);
    } catch (const ba::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ba::InvalidModulus& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ba::NotUpperTriangular& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ba::DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ba::MixedFields& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ba::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const ba::Error& e) {
        // domain failures: not very good, zero value, zero q, ...
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}
