// Command-line front end: parse quadratic forms and maps from polynomial
// text, run the library operations, and emit human tables or JSON.
//
// Exit codes: 0 success, 1 mathematical precondition failure, 2 parse error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sp2g/classify.hpp"
#include "sp2g/group.hpp"
#include "sp2g/parse.hpp"
#include "sp2g/render.hpp"
#include "sp2g/search.hpp"

namespace {

using namespace sp2g;

std::vector<char> split_vars(const std::string& vars) {
    std::vector<char> names;
    for (size_t i = 0; i < vars.size();) {
        if (std::isspace(static_cast<unsigned char>(vars[i])) || vars[i] == ',') {
            ++i;
            continue;
        }
        if (!std::isalpha(static_cast<unsigned char>(vars[i]))) {
            throw ParseError("variables must be single letters");
        }
        names.push_back(vars[i]);
        ++i;
        if (i < vars.size() && std::isalpha(static_cast<unsigned char>(vars[i]))) {
            throw ParseError("variables must be separated by spaces");
        }
    }
    if (names.empty()) throw ParseError("empty --vars list");
    return names;
}

// "-" means stdout.
void emit(const std::string& path, const std::string& payload) {
    if (path == "-" || path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << payload;
}

struct CommonArgs {
    std::string vars;
    std::string json_path;  // set (possibly to "-") when --json was given
    bool json = false;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_vars = true) {
    cmd->add_option("--json", args.json_path,
                    "emit JSON (to PATH, or stdout when PATH is omitted or '-')")
        ->expected(0, 1);
    if (with_vars) {
        cmd->add_option("--vars", args.vars, "explicit variable order, e.g. \"w x y z\"");
    }
}

QuadraticMap parse_map_arg(const std::string& text, const CommonArgs& args) {
    if (!args.vars.empty()) return parse_map(text, split_vars(args.vars));
    return parse_map(text);
}

QuadraticForm parse_form_arg(const std::string& text, const CommonArgs& args) {
    if (!args.vars.empty()) return parse_form(text, split_vars(args.vars));
    return parse_form(text);
}

int run(int argc, char** argv) {
    CLI::App app{"quadratic maps over F2 and the special 2-groups they encode"};
    app.require_subcommand(1);

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a form or map at a vector");
    std::string eval_text, eval_vec;
    CommonArgs eval_args;
    eval_cmd->add_option("expr", eval_text, "polynomial or tuple of polynomials")->required();
    eval_cmd->add_option("vector", eval_vec, "'0'/'1' string, coordinate 0 first")->required();
    add_common(eval_cmd, eval_args);

    // normalize
    auto* norm_cmd = app.add_subcommand("normalize", "normal form of a quadratic form");
    std::string norm_text;
    CommonArgs norm_args;
    norm_cmd->add_option("form", norm_text)->required();
    add_common(norm_cmd, norm_args);

    // arf
    auto* arf_cmd = app.add_subcommand("arf", "Arf invariant of a regular form");
    std::string arf_text;
    CommonArgs arf_args;
    arf_cmd->add_option("form", arf_text)->required();
    add_common(arf_cmd, arf_args);

    // classify
    auto* cls_cmd = app.add_subcommand(
        "classify", "strong reality and total orthogonality of a quadratic map");
    std::string cls_text;
    CommonArgs cls_args;
    cls_cmd->add_option("map", cls_text)->required();
    add_common(cls_cmd, cls_args);

    // construct
    auto* con_cmd = app.add_subcommand("construct", "the special 2-group of a map");
    std::string con_text;
    bool con_cayley = false;
    CommonArgs con_args;
    con_cmd->add_option("map", con_text)->required();
    con_cmd->add_flag("--cayley", con_cayley,
                      "emit the multiplication table as CSV (|G| <= 256)");
    add_common(con_cmd, con_args);

    // search
    auto* search_cmd = app.add_subcommand("search", "isomorph-free survey of one order");
    uint64_t search_order = 0;
    bool search_exhaustive = false;
    double search_budget = 0;
    int search_threads = 0;
    CommonArgs search_args;
    search_cmd->add_option("--order", search_order, "group order (power of two, 8..128)")
        ->required();
    search_cmd->add_flag("--exhaustive", search_exhaustive,
                         "sweep every split (default for orders <= 64)");
    search_cmd->add_option("--budget", search_budget, "wall-clock budget in seconds");
    search_cmd->add_option("--threads", search_threads, "worker threads (0 = hardware)");
    add_common(search_cmd, search_args, false);

    // claims
    auto* claims_cmd = app.add_subcommand("claims", "reproduce the survey-level claims");
    bool claims_stretch = false;
    double claims_budget = 0;
    int claims_threads = 0;
    CommonArgs claims_args;
    claims_cmd->add_flag("--stretch", claims_stretch, "also sweep order 128 exhaustively");
    claims_cmd->add_option("--budget", claims_budget, "wall-clock budget in seconds");
    claims_cmd->add_option("--threads", claims_threads, "worker threads (0 = hardware)");
    add_common(claims_cmd, claims_args, false);

    // examples
    auto* ex_cmd = app.add_subcommand("examples", "the registry of worked examples");
    CommonArgs ex_args;
    add_common(ex_cmd, ex_args, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    auto json_wanted = [](const CLI::App* cmd, const CommonArgs& args) {
        return cmd->count("--json") > 0 || !args.json_path.empty();
    };

    if (*eval_cmd) {
        QuadraticMap qm = parse_map_arg(eval_text, eval_args);
        F2Vector v = F2Vector::from_string(eval_vec);
        std::cout << evaluate_map(qm, v).to_string() << "\n";
        return 0;
    }

    if (*norm_cmd) {
        QuadraticForm q = parse_form_arg(norm_text, norm_args);
        Normalization norm = normalize(q);
        if (json_wanted(norm_cmd, norm_args)) {
            std::string payload = "{\n  \"pairs\": [";
            for (size_t i = 0; i < norm.form.pairs.size(); ++i) {
                if (i) payload += ", ";
                payload += "[" + std::to_string(norm.form.pairs[i].a) + "," +
                           std::to_string(norm.form.pairs[i].b) + "]";
            }
            payload += "],\n  \"singular_diag\": [";
            for (size_t i = 0; i < norm.form.singular_diag.size(); ++i) {
                if (i) payload += ", ";
                payload += std::to_string(norm.form.singular_diag[i]);
            }
            payload += "],\n  \"transition\": [";
            for (int r = 0; r < norm.transition.rows(); ++r) {
                if (r) payload += ", ";
                payload += "\"" + norm.transition.row(r).to_string() + "\"";
            }
            payload += "]\n}\n";
            emit(norm_args.json_path, payload);
            return 0;
        }
        std::cout << "form: " << to_string(q) << "\n";
        std::cout << "normal form: ";
        for (size_t i = 0; i < norm.form.pairs.size(); ++i) {
            if (i) std::cout << " _|_ ";
            std::cout << "[" << norm.form.pairs[i].a << "," << norm.form.pairs[i].b << "]";
        }
        if (!norm.form.singular_diag.empty()) {
            if (!norm.form.pairs.empty()) std::cout << " _|_ ";
            std::cout << "<";
            for (size_t i = 0; i < norm.form.singular_diag.size(); ++i) {
                if (i) std::cout << ",";
                std::cout << norm.form.singular_diag[i];
            }
            std::cout << ">";
        }
        if (norm.form.pairs.empty() && norm.form.singular_diag.empty()) std::cout << "(empty)";
        std::cout << "\n";
        std::cout << "transition matrix (columns are the new basis):\n"
                  << norm.transition.to_string() << "\n";
        return 0;
    }

    if (*arf_cmd) {
        QuadraticForm q = parse_form_arg(arf_text, arf_args);
        std::cout << (arf(q) ? "1" : "0") << "\n";
        return 0;
    }

    if (*cls_cmd) {
        QuadraticMap qm = parse_map_arg(cls_text, cls_args);
        ClassificationReport report = classify(qm);
        if (json_wanted(cls_cmd, cls_args)) {
            emit(cls_args.json_path, report_to_json(report));
        } else {
            std::cout << report_to_table(report);
        }
        return 0;
    }

    if (*con_cmd) {
        QuadraticMap qm = parse_map_arg(con_text, con_args);
        SpecialGroup g = SpecialGroup::construct(qm);
        if (con_cayley) {
            if (g.order() > 256) {
                throw std::invalid_argument("--cayley is capped at group order 256");
            }
            std::string csv;
            for (uint64_t x = 0; x < g.order(); ++x) {
                for (uint64_t y = 0; y < g.order(); ++y) {
                    if (y) csv += ',';
                    csv += std::to_string(g.multiply_packed(x, y));
                }
                csv += '\n';
            }
            std::cout << csv;
            return 0;
        }
        std::cout << "group of order " << g.order() << ": dim V = " << g.dim_v()
                  << ", dim W = " << g.dim_w() << "\n";
        std::cout << "involutions (including identity): " << involution_count(g) << "\n";
        if (g.dim_w() == 1) {
            std::cout << "extraspecial: " << extraspecial_name(classify_extraspecial(g))
                      << "\n";
        }
        if (g.order() <= 1024) {
            SpecialCheck check = verify_special(g);
            std::cout << "verify_special: center " << (check.center_ok ? "ok" : "FAIL")
                      << ", squares " << (check.squares_ok ? "ok" : "FAIL")
                      << ", commutators " << (check.commutators_ok ? "ok" : "FAIL")
                      << ", derived " << (check.derived_ok ? "ok" : "FAIL") << "\n";
        }
        return 0;
    }

    if (*search_cmd) {
        if (search_order > 64 && !search_exhaustive && search_budget <= 0) {
            throw std::invalid_argument(
                "order 128 is a stretch sweep: pass --exhaustive or --budget SECONDS");
        }
        SurveyReport report = survey(search_order, search_threads, search_budget);
        if (json_wanted(search_cmd, search_args)) {
            emit(search_args.json_path, survey_to_json(report));
        } else {
            std::cout << survey_to_table(report);
        }
        return 0;
    }

    if (*claims_cmd) {
        ClaimOptions options;
        options.stretch = claims_stretch;
        options.budget_seconds = claims_budget;
        options.threads = claims_threads;
        ClaimReport report = reproduce_claims(options);
        if (json_wanted(claims_cmd, claims_args)) {
            emit(claims_args.json_path, claims_to_json(report));
        } else {
            std::cout << claims_to_table(report);
        }
        return report.all_passed() ? 0 : 1;
    }

    if (*ex_cmd) {
        if (json_wanted(ex_cmd, ex_args)) {
            std::string payload = "{\n";
            const auto& registry = paper_examples();
            for (size_t i = 0; i < registry.size(); ++i) {
                payload += "  \"" + registry[i].name + "\": \"" +
                           to_string(registry[i].map) + "\"";
                if (i + 1 < registry.size()) payload += ",";
                payload += "\n";
            }
            payload += "}\n";
            emit(ex_args.json_path, payload);
        } else {
            for (const NamedMap& entry : paper_examples()) {
                std::cout << entry.name << ": " << to_string(entry.map) << "\n";
            }
        }
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const sp2g::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
