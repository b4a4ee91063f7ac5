// Command-line front end: generate triangles, certify total positivity,
// check coefficient criteria, and probe the built-in conjecture triangles.
//
// Exit status: 0 when the requested check verified (or output was produced),
// 1 when a check ran and was refuted (a witness is printed), 2 on usage or
// input errors.

#include <CLI11.hpp>

#include "tptri/catalog.hpp"
#include "tptri/errors.hpp"
#include "tptri/q_analogue.hpp"
#include "tptri/report_io.hpp"
#include "tptri/spec_file.hpp"
#include "tptri/tp_cert.hpp"
#include "tptri/triangle.hpp"

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace {

using namespace tptri;

enum class Format { plain, csv, json };

const std::map<std::string, Format> kFormatNames{
    {"plain", Format::plain}, {"csv", Format::csv}, {"json", Format::json}};

// What --spec resolved to: exactly one of the three spec kinds, plus any
// golden rows that came along from a spec file.
struct Resolved {
    std::string display;
    std::optional<CoefficientSpec> numeric;
    std::optional<QCoefficientSpec> q;
    std::optional<GeneralSpec> general;
    std::vector<GoldenRow> golden;
};

std::string catalog_names() {
    std::string names;
    for (const CatalogEntry& entry : catalog()) {
        if (!names.empty()) names += ", ";
        names += entry.name;
    }
    return names;
}

Resolved resolve_spec(const std::string& ref) {
    Resolved res;
    if (const CatalogEntry* entry = catalog_find(ref)) {
        res.display = entry->name;
        if (const auto* coeff = std::get_if<CoefficientSpec>(&entry->spec))
            res.numeric = *coeff;
        else
            res.general = std::get<GeneralSpec>(entry->spec);
        return res;
    }
    if (!std::filesystem::exists(ref))
        throw Error("unknown spec \"" + ref + "\": not a catalog name (" +
                    catalog_names() + ") and no such file");
    SpecFile file = load_spec_file(ref);
    res.display = file.name.empty() ? ref : file.name;
    res.golden = file.golden;
    if (file.q_valued())
        res.q = file.q_spec();
    else
        res.numeric = file.numeric();
    return res;
}

// --tp-order value: "all" or a positive integer.
long parse_tp_order(const std::string& text, long dim) {
    if (text == "all") return dim;
    long value = 0;
    std::istringstream in(text);
    if (!(in >> value) || !in.eof() || value < 1)
        throw Error("--tp-order wants \"all\" or a positive integer, got \"" + text + "\"");
    return value;
}

void enforce_cap(long dim, long effective_order, long max_order) {
    if (effective_order >= dim && dim > max_order)
        throw Error("full minor enumeration on a " + std::to_string(dim) + "x" +
                    std::to_string(dim) + " matrix exceeds the safety cap " +
                    std::to_string(max_order) + "; raise --max-order to allow it");
}

// ---- output rendering ----------------------------------------------------

std::string join(const std::vector<long>& ids, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(ids[i]);
    }
    return out;
}

std::string order_text(const std::optional<long>& order) {
    return order ? std::to_string(*order) : "all";
}

void print_tp_report(const TPReport& report, Format format,
                     const std::optional<std::string>& note) {
    switch (format) {
        case Format::plain:
            std::cout << "verified: " << (report.verified ? "yes" : "no") << "\n"
                      << "order checked: " << order_text(report.order_checked) << "\n"
                      << "minors evaluated: " << report.minors_evaluated << "\n";
            if (report.witness) {
                std::cout << "witness rows: " << join(report.witness->rows, " ") << "\n"
                          << "witness cols: " << join(report.witness->cols, " ") << "\n"
                          << "witness value: " << to_string(report.witness->value) << "\n";
            }
            if (note) std::cout << "note: " << *note << "\n";
            return;
        case Format::csv:
            std::cout << "verified," << (report.verified ? "yes" : "no") << "\n"
                      << "order_checked," << order_text(report.order_checked) << "\n"
                      << "minors_evaluated," << report.minors_evaluated << "\n";
            if (report.witness) {
                std::cout << "witness_rows," << join(report.witness->rows, ",") << "\n"
                          << "witness_cols," << join(report.witness->cols, ",") << "\n"
                          << "witness_value," << to_string(report.witness->value) << "\n";
            }
            if (note) std::cout << "note," << *note << "\n";
            return;
        case Format::json: {
            nlohmann::json j = to_json(report);
            if (note) j["note"] = *note;
            std::cout << j.dump(2) << "\n";
            return;
        }
    }
}

void print_q_tp_report(const QTPReport& report, Format format) {
    switch (format) {
        case Format::plain:
            std::cout << "verified: " << (report.verified ? "yes" : "no") << "\n"
                      << "order checked: " << order_text(report.order_checked) << "\n"
                      << "minors evaluated: " << report.minors_evaluated << "\n";
            if (report.witness) {
                std::cout << "witness rows: " << join(report.witness->rows, " ") << "\n"
                          << "witness cols: " << join(report.witness->cols, " ") << "\n"
                          << "witness value: " << to_string(report.witness->value) << "\n"
                          << "first negative coefficient: q^"
                          << report.witness->first_negative_power << "\n";
            }
            return;
        case Format::csv:
            std::cout << "verified," << (report.verified ? "yes" : "no") << "\n"
                      << "order_checked," << order_text(report.order_checked) << "\n"
                      << "minors_evaluated," << report.minors_evaluated << "\n";
            if (report.witness) {
                std::cout << "witness_rows," << join(report.witness->rows, ",") << "\n"
                          << "witness_cols," << join(report.witness->cols, ",") << "\n"
                          << "witness_value," << to_string(report.witness->value) << "\n"
                          << "first_negative_power," << report.witness->first_negative_power
                          << "\n";
            }
            return;
        case Format::json:
            std::cout << to_json(report).dump(2) << "\n";
            return;
    }
}

void print_criterion_results(const std::vector<CriterionResult>& results, Format format) {
    switch (format) {
        case Format::plain:
            for (const CriterionResult& res : results) {
                if (res.holds) {
                    std::cout << res.criterion << ": holds\n";
                } else {
                    std::cout << res.criterion << ": fails at index "
                              << res.first_failure->index << ": "
                              << res.first_failure->inequality << "\n";
                }
            }
            return;
        case Format::csv:
            for (const CriterionResult& res : results) {
                std::cout << res.criterion << "," << (res.holds ? "holds" : "fails");
                if (!res.holds) {
                    std::cout << "," << res.first_failure->index << ","
                              << res.first_failure->inequality;
                }
                std::cout << "\n";
            }
            return;
        case Format::json: {
            nlohmann::json j = nlohmann::json::array();
            for (const CriterionResult& res : results) j.push_back(to_json(res));
            std::cout << j.dump(2) << "\n";
            return;
        }
    }
}

// ---- triangle construction and printing ----------------------------------

// Numeric and polynomial triangles share the printing code via rows of
// entry strings.
struct BuiltRows {
    long index_origin = 0;
    std::vector<std::vector<std::string>> rows;
};

BuiltRows rows_of(const LowerTriangle& tri) {
    BuiltRows out;
    out.index_origin = tri.index_origin();
    for (long n = tri.index_origin(); n <= tri.max_label(); ++n) {
        std::vector<std::string> row;
        for (const Rational& v : tri.row(n)) row.push_back(to_string(v));
        out.rows.push_back(std::move(row));
    }
    return out;
}

BuiltRows rows_of(const QLowerTriangle& tri) {
    BuiltRows out;
    for (long n = 0; n <= tri.max_label(); ++n) {
        std::vector<std::string> row;
        for (const QPoly& v : tri.row(n)) row.push_back(to_string(v));
        out.rows.push_back(std::move(row));
    }
    return out;
}

void print_rows(const std::string& name, const BuiltRows& built, long order, Format format) {
    // Print rows up to the requested order only (golden checks may have
    // forced a taller build).
    std::size_t keep = static_cast<std::size_t>(order - built.index_origin) + 1;
    switch (format) {
        case Format::plain:
            for (std::size_t i = 0; i < keep; ++i) {
                const std::vector<std::string>& row = built.rows[i];
                for (std::size_t j = 0; j < row.size(); ++j) {
                    if (j) std::cout << ((row[j].find(' ') == std::string::npos &&
                                          row[j - 1].find(' ') == std::string::npos)
                                             ? " "
                                             : " | ");
                    std::cout << row[j];
                }
                std::cout << "\n";
            }
            return;
        case Format::csv:
            for (std::size_t i = 0; i < keep; ++i) {
                const std::vector<std::string>& row = built.rows[i];
                for (std::size_t j = 0; j < row.size(); ++j) {
                    if (j) std::cout << ",";
                    std::cout << row[j];
                }
                std::cout << "\n";
            }
            return;
        case Format::json: {
            nlohmann::json rows = nlohmann::json::array();
            for (std::size_t i = 0; i < keep; ++i) rows.push_back(built.rows[i]);
            nlohmann::json j{{"name", name},
                             {"index_origin", built.index_origin},
                             {"rows", rows}};
            std::cout << j.dump(2) << "\n";
            return;
        }
    }
}

// ---- command implementations ----------------------------------------------

struct Options {
    std::string spec;
    std::string name;  // conjecture
    long order = 0;
    std::string tp_order = "all";
    long max_order = 16;
    std::string which = "all";
    Format format = Format::plain;
};

long max_golden_row(const std::vector<GoldenRow>& golden) {
    long max_n = -1;
    for (const GoldenRow& row : golden) max_n = std::max(max_n, row.n);
    return max_n;
}

// Returns the first golden mismatch as text, if any.
std::optional<std::string> check_golden_numeric(const LowerTriangle& tri,
                                                const std::vector<GoldenRow>& golden) {
    for (const GoldenRow& row : golden) {
        for (std::size_t j = 0; j < row.entries.size(); ++j) {
            const QPoly& want = row.entries[j];
            const Rational& have = tri.at(row.n, static_cast<long>(j));
            if (!want.is_constant() || want.constant_value() != have) {
                return "golden mismatch at row " + std::to_string(row.n) + ", column " +
                       std::to_string(j) + ": expected " + to_string(want) + ", got " +
                       to_string(have);
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_golden_q(const QLowerTriangle& tri,
                                          const std::vector<GoldenRow>& golden) {
    for (const GoldenRow& row : golden) {
        for (std::size_t j = 0; j < row.entries.size(); ++j) {
            const QPoly& want = row.entries[j];
            const QPoly& have = tri.at(row.n, static_cast<long>(j));
            if (want != have) {
                return "golden mismatch at row " + std::to_string(row.n) + ", column " +
                       std::to_string(j) + ": expected " + to_string(want) + ", got " +
                       to_string(have);
            }
        }
    }
    return std::nullopt;
}

int cmd_gen(const Options& opt) {
    Resolved res = resolve_spec(opt.spec);
    long build_order = std::max(opt.order, max_golden_row(res.golden));

    if (res.numeric) {
        LowerTriangle tri = build_recursive(*res.numeric, build_order);
        if (auto mismatch = check_golden_numeric(tri, res.golden)) {
            std::cout << *mismatch << "\n";
            return 1;
        }
        print_rows(res.display, rows_of(tri), opt.order, opt.format);
        return 0;
    }
    if (res.q) {
        QLowerTriangle tri = build_q_recursive(*res.q, build_order);
        if (auto mismatch = check_golden_q(tri, res.golden)) {
            std::cout << *mismatch << "\n";
            return 1;
        }
        print_rows(res.display, rows_of(tri), opt.order, opt.format);
        return 0;
    }
    LowerTriangle tri = build_general(*res.general, std::max(opt.order, res.general->index_origin));
    print_rows(res.display, rows_of(tri), opt.order, opt.format);
    return 0;
}

int cmd_catalan_like(const Options& opt) {
    Resolved res = resolve_spec(opt.spec);
    if (!res.numeric)
        throw Error("catalan-like needs a numeric coefficient spec");
    std::vector<Rational> seq = catalan_like(*res.numeric, opt.order);

    switch (opt.format) {
        case Format::plain:
        case Format::csv: {
            const char* sep = (opt.format == Format::plain) ? " " : ",";
            for (std::size_t i = 0; i < seq.size(); ++i) {
                if (i) std::cout << sep;
                std::cout << to_string(seq[i]);
            }
            std::cout << "\n";
            return 0;
        }
        case Format::json: {
            nlohmann::json terms = nlohmann::json::array();
            for (const Rational& v : seq) terms.push_back(to_string(v));
            std::cout << nlohmann::json{{"name", res.display}, {"terms", terms}}.dump(2)
                      << "\n";
            return 0;
        }
    }
    return 0;
}

int cmd_check_tp(const Options& opt) {
    Resolved res = resolve_spec(opt.spec);
    if (res.q)
        throw Error("spec is q-valued; use check-qtp");
    Matrix<Rational> m = res.numeric
                             ? build_recursive(*res.numeric, opt.order).to_matrix()
                             : build_general(*res.general, opt.order).to_matrix();
    long r = parse_tp_order(opt.tp_order, std::min(m.rows(), m.cols()));
    enforce_cap(std::min(m.rows(), m.cols()), r, opt.max_order);
    TPReport report = is_tp_r(m, r);
    print_tp_report(report, opt.format, std::nullopt);
    return report.verified ? 0 : 1;
}

int cmd_check_qtp(const Options& opt) {
    Resolved res = resolve_spec(opt.spec);
    if (res.general)
        throw Error("check-qtp needs a coefficient spec, not a general recurrence");
    QCoefficientSpec spec = res.q ? *res.q : embed_numeric(*res.numeric);
    Matrix<QPoly> m = build_q_recursive(spec, opt.order).to_matrix();
    long r = parse_tp_order(opt.tp_order, std::min(m.rows(), m.cols()));
    enforce_cap(std::min(m.rows(), m.cols()), r, opt.max_order);
    QTPReport report = is_q_tp_r(m, r);
    print_q_tp_report(report, opt.format);
    return report.verified ? 0 : 1;
}

int cmd_check_criteria(const Options& opt) {
    Resolved res = resolve_spec(opt.spec);
    if (res.general)
        throw Error("check-criteria needs a coefficient spec, not a general recurrence");

    std::vector<CriterionResult> results;
    if (res.numeric) {
        if (opt.which == "all") {
            for (Criterion c : kAllCriteria)
                results.push_back(check_criterion(*res.numeric, c, opt.order));
        } else {
            std::istringstream in(opt.which);
            std::string token;
            while (std::getline(in, token, ','))
                results.push_back(check_criterion(*res.numeric, token, opt.order));
        }
    } else {
        if (opt.which == "all") {
            for (QCriterion c : kAllQCriteria)
                results.push_back(check_q_criterion(*res.q, c, opt.order));
        } else {
            std::istringstream in(opt.which);
            std::string token;
            while (std::getline(in, token, ','))
                results.push_back(check_q_criterion(*res.q, token, opt.order));
        }
    }
    print_criterion_results(results, opt.format);
    for (const CriterionResult& r : results) {
        if (!r.holds) return 1;
    }
    return 0;
}

int cmd_factorization(const Options& opt) {
    Resolved res = resolve_spec(opt.spec);
    if (!res.numeric)
        throw Error("factorization needs a numeric coefficient spec");
    bool ok = verify_factorization(*res.numeric, opt.order);
    switch (opt.format) {
        case Format::plain:
            std::cout << "factorization " << (ok ? "verified" : "refuted") << " up to order "
                      << opt.order << "\n";
            break;
        case Format::csv:
            std::cout << "verified," << (ok ? "yes" : "no") << "\n"
                      << "order," << opt.order << "\n";
            break;
        case Format::json:
            std::cout << nlohmann::json{{"type", "factorization"},
                                        {"order", opt.order},
                                        {"verified", ok}}
                             .dump(2)
                      << "\n";
            break;
    }
    return ok ? 0 : 1;
}

int cmd_conjecture(const Options& opt) {
    const CatalogEntry* entry = catalog_find(opt.name);
    if (!entry || !std::holds_alternative<GeneralSpec>(entry->spec))
        throw Error("conjecture targets are the general-recurrence triangles "
                    "(eulerian, narayana); got \"" + opt.name + "\"");
    const GeneralSpec& spec = std::get<GeneralSpec>(entry->spec);
    Matrix<Rational> m = build_general(spec, std::max(opt.order, spec.index_origin)).to_matrix();
    long r = parse_tp_order(opt.tp_order, std::min(m.rows(), m.cols()));
    enforce_cap(std::min(m.rows(), m.cols()), r, opt.max_order);
    TPReport report = is_tp_r(m, r);
    print_tp_report(report, opt.format, "evidence at finite truncation, not a proof");
    return report.verified ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact total-positivity certificates for recursively defined triangles"};
    app.require_subcommand(1);

    Options opt;

    auto add_format = [&opt](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "output format")
            ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case))
            ->default_str("plain");
    };
    auto add_spec_order = [&opt, &add_format](CLI::App* cmd) {
        cmd->add_option("spec,--spec", opt.spec, "catalog name or spec file path")->required();
        cmd->add_option("--order", opt.order, "truncation order (last row label)")
            ->required()
            ->check(CLI::NonNegativeNumber);
        add_format(cmd);
    };
    auto add_tp_options = [&opt](CLI::App* cmd) {
        cmd->add_option("--tp-order", opt.tp_order,
                        "largest minor order to check, or \"all\"");
        cmd->add_option("--max-order", opt.max_order,
                        "safety cap on full enumeration dimension")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* gen = app.add_subcommand("gen", "print triangle rows");
    add_spec_order(gen);

    CLI::App* catalan = app.add_subcommand("catalan-like", "print the first column");
    add_spec_order(catalan);

    CLI::App* check_tp = app.add_subcommand("check-tp", "certify total positivity");
    add_spec_order(check_tp);
    add_tp_options(check_tp);

    CLI::App* check_qtp = app.add_subcommand("check-qtp", "certify q-total positivity");
    add_spec_order(check_qtp);
    add_tp_options(check_qtp);

    CLI::App* criteria = app.add_subcommand("check-criteria", "check coefficient criteria");
    add_spec_order(criteria);
    criteria->add_option("--which", opt.which,
                         "comma-separated criterion names, or \"all\"");

    CLI::App* fact = app.add_subcommand("factorization",
                                        "verify the shifted-triangle factorization");
    add_spec_order(fact);

    CLI::App* conj = app.add_subcommand("conjecture",
                                        "total positivity evidence for a conjecture triangle");
    conj->add_option("name,--name", opt.name, "eulerian or narayana")->required();
    conj->add_option("--order", opt.order, "truncation order (last row label)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    add_format(conj);
    add_tp_options(conj);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(gen)) return cmd_gen(opt);
        if (app.got_subcommand(catalan)) return cmd_catalan_like(opt);
        if (app.got_subcommand(check_tp)) return cmd_check_tp(opt);
        if (app.got_subcommand(check_qtp)) return cmd_check_qtp(opt);
        if (app.got_subcommand(criteria)) return cmd_check_criteria(opt);
        if (app.got_subcommand(fact)) return cmd_factorization(opt);
        if (app.got_subcommand(conj)) return cmd_conjecture(opt);
        throw Error("no command selected");
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
