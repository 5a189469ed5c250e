#include "fachom/errors.hpp"
#include "fachom/excision.hpp"
#include "fachom/free_conf.hpp"
#include "fachom/io.hpp"
#include "fachom/presets.hpp"
#include "fachom/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace fachom;

namespace {

constexpr int kOk = 0, kInput = 2, kValidation = 3, kRole = 4, kVerify = 5;

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Input:
        case ErrorKind::SyntaxError:
        case ErrorKind::UnknownModel: return kInput;
        case ErrorKind::RoleMismatch: return kRole;
        default: return kValidation;
    }
}

struct Options {
    int max_weight = 3;
    std::string format = "table";
    unsigned jobs = 1;
    std::string output;
    std::string expect;
};

/// Thrown when a produced table differs from the --expect table.
struct Mismatch {
    std::string message;
};

void emit(const Options& o, const std::string& text) {
    if (o.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.output);
    if (!out) throw Error(ErrorKind::Input, "cannot write '" + o.output + "'");
    out << text;
}

BettiTable load_table(const std::string& path) {
    std::string text = read_text(path);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return BettiTable::from_json(parse_json(text, path));
    return BettiTable::from_csv(text);
}

std::string render(const Options& o, const BettiTable& t) {
    if (!o.expect.empty()) {
        Window window = Window::abs_at_most(o.max_weight);
        if (auto slot = first_divergence(t.restricted(window), load_table(o.expect).restricted(window)))
            throw Mismatch{"table differs from " + o.expect + " at " + to_string(*slot)};
    }
    if (o.format == "csv") return t.to_csv();
    if (o.format == "json") {
        nlohmann::json j = t.to_json();
        j["max_weight"] = o.max_weight;
        return j.dump(2) + "\n";
    }
    return t.to_text();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fachom: exact factorization homology calculator"};
    app.require_subcommand(1);
    Options o;
    app.add_option("-w,--max-weight", o.max_weight, "weight window |w| <= N")->check(CLI::NonNegativeNumber);
    app.add_option("-f,--format", o.format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_option("-j,--jobs", o.jobs, "worker threads for homology")->check(CLI::PositiveNumber);
    app.add_option("-o,--output", o.output, "write the result to PATH");
    app.add_option("--expect", o.expect, "compare the table with a JSON or CSV table; exit 5 if they differ");
    app.fallthrough();

    std::function<int()> action;

    auto* hh = app.add_subcommand("hochschild", "Hochschild homology via the cyclic bar complex");
    std::string algebra_spec;
    hh->add_option("algebra", algebra_spec, "preset name or presentation file")->required();
    hh->callback([&] {
        action = [&] { return emit(o, render(o, homology(cyclic_bar(load_algebra(algebra_spec, o.max_weight), o.max_weight),
                                                         Window::abs_at_most(o.max_weight)))), kOk; };
    });

    auto* ex = app.add_subcommand("excise", "evaluate a gluing expression");
    std::string expr, bindings_file;
    std::vector<std::string> inline_bindings;
    ex->add_option("expression", expr, "e.g. 'circle(A)' or 'glue(M; A; N)'; @PATH reads it from a file")->required();
    ex->add_option("-b,--bindings", bindings_file, "JSON bindings file");
    ex->add_option("--bind", inline_bindings, "NAME=PRESET algebra binding (repeatable)");
    ex->callback([&] {
        action = [&] {
            GluingExpr e = parse_gluing(expr.rfind('@', 0) == 0 ? read_text(expr.substr(1)) : expr);
            nlohmann::json j = bindings_file.empty() ? nlohmann::json::object()
                                                     : parse_json(read_text(bindings_file), bindings_file);
            for (const auto& b : inline_bindings) {
                auto eq = b.find('=');
                if (eq == std::string::npos || eq == 0)
                    throw Error(ErrorKind::Input, "--bind expects NAME=PRESET, got '" + b + "'");
                j[b.substr(0, eq)] = b.substr(eq + 1);
            }
            CoefficientAssignment c = bindings_from_json(j, o.max_weight);
            return emit(o, render(o, evaluate(e, c, o.max_weight))), kOk;
        };
    });

    auto* ver = app.add_subcommand("verify", "run named verification checks");
    std::vector<std::string> selectors;
    bool all = false, list = false;
    ver->add_option("checks", selectors, "check ids, families or glob patterns");
    ver->add_flag("--all", all, "run every registered check");
    ver->add_flag("--list", list, "print the registered check ids");
    ver->callback([&] {
        action = [&] {
            if (list) {
                std::string ids;
                for (const auto& c : registry()) ids += c.id + "\n";
                return emit(o, ids), kOk;
            }
            if (all) selectors.push_back("all");
            if (selectors.empty()) throw Error(ErrorKind::Input, "verify needs check ids or --all");
            VerifyRun run = run_checks(select_checks(selectors), o.max_weight);
            if (o.format == "json" || !o.output.empty()) emit(o, run.to_json().dump(2) + "\n");
            if (o.format != "json" || !o.output.empty())
                for (const auto& r : run.reports) std::cout << r.summary() << "\n";
            return run.pass() ? kOk : kVerify;
        };
    });

    auto* hhh = app.add_subcommand("higher-hh", "homology of X (x) A for a commutative algebra");
    std::string model_spec, hhh_algebra;
    hhh->add_option("model", model_spec, "point, circle, sphere2, torus, interval or a JSON model")->required();
    hhh->add_option("algebra", hhh_algebra, "preset name or presentation file")->required();
    hhh->callback([&] {
        action = [&] {
            WgAlgebra a = load_algebra(hhh_algebra, o.max_weight);
            ChainComplex c = std::filesystem::is_regular_file(model_spec)
                                 ? space_tensor(load_simplicial(model_spec, 0), a, o.max_weight)
                                 : space_tensor(model_spec, a, o.max_weight);
            return emit(o, render(o, homology(c, Window::abs_at_most(o.max_weight)))), kOk;
        };
    });

    auto* fd = app.add_subcommand("free-dims", "dimensions of the free n-disk algebra");
    int n = 1;
    std::string gens_spec;
    fd->add_option("n", n, "dimension")->required()->check(CLI::PositiveNumber);
    fd->add_option("generators", gens_spec, "generator count or JSON generator file")->required();
    fd->callback([&] {
        action = [&] { return emit(o, render(o, free_en_dims(n, load_generators(gens_spec), o.max_weight))), kOk; };
    });

    auto* conf = app.add_subcommand("conf", "labelled configuration homology via the Lie model");
    std::string conf_model;
    conf->add_option("model", conf_model, "point, R<n>, S<m>, S<m>xR<k> or a JSON model")->required();
    conf->add_option("n", n, "dimension")->required()->check(CLI::PositiveNumber);
    conf->add_option("generators", gens_spec, "generator count or JSON generator file")->required();
    conf->callback([&] {
        action = [&] {
            return emit(o, render(o, conf_labeled_homology(load_commutative_model(conf_model), n,
                                                           load_generators(gens_spec), o.max_weight))),
                   kOk;
        };
    });

    auto* ce = app.add_subcommand("ce", "Chevalley-Eilenberg (co)homology of a Lie algebra");
    std::string lie_spec, which = "chains";
    ce->add_option("lie", lie_spec, "preset name or presentation file")->required();
    ce->add_option("kind", which, "chains or cochains")->check(CLI::IsMember({"chains", "cochains"}));
    ce->callback([&] {
        action = [&] {
            WgLieAlgebra g = load_lie(lie_spec, o.max_weight);
            ChainComplex c = which == "chains" ? ce_chains(g, o.max_weight) : ce_cochains(g, o.max_weight).carrier();
            return emit(o, render(o, homology(c, Window::abs_at_most(o.max_weight)))), kOk;
        };
    });

    auto* pre = app.add_subcommand("presets", "list built-in algebras, Lie algebras and models");
    pre->callback([&] {
        action = [&] {
            std::string text = "algebras:";
            for (const auto& s : algebra_preset_names()) text += " " + s;
            text += "\nlie algebras:";
            for (const auto& s : lie_preset_names()) text += " " + s;
            text += "\nsimplicial models: point circle sphere2 torus interval\n";
            text += "commutative models: point R<n> S<m> S<m>xR<k>\n";
            return emit(o, text), kOk;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInput;
    }
    try {
        set_default_jobs(o.jobs);
        return action();
    } catch (const Mismatch& m) {
        std::cerr << "fachom: " << m.message << "\n";
        return kVerify;
    } catch (const SyntaxError& e) {
        std::cerr << "fachom: " << e.what() << "\n";
        return kInput;
    } catch (const Error& e) {
        std::cerr << "fachom: " << e.what() << "\n";
        return exit_code(e.kind());
    }
}
