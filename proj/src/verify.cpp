#include "fachom/verify.hpp"

#include "fachom/errors.hpp"
#include "fachom/excision.hpp"
#include "fachom/free_conf.hpp"
#include "fachom/presets.hpp"

#include <fnmatch.h>

#include <set>

namespace fachom {

// ---------------------------------------------------------------- Lie checks

Report run_hoch_duality(const WgLieAlgebra& g, int W, Audit& audit, const std::string& name) {
    audit.lie(name, g);
    WgAlgebra u = enveloping(g, W);
    audit.algebra("U" + name, u);
    WgAlgebra c = ce_cochains(g, W);
    audit.algebra("C*(" + name + ")", c);
    ChainComplex hh_u = cyclic_bar(u, W);
    audited_homology(audit, "HH(U" + name + ")", hh_u, W);
    BettiTable a = audited_homology(audit, "HH(U" + name + ")^v", dual(hh_u), W);
    BettiTable b = audited_homology(audit, "HH(C*(" + name + "))", cyclic_bar(c, W), W);
    return compare_routes("hoch-duality:" + name, {{"dual HH(Ug)", a}, {"HH(C*g)", b}}, Window::abs_at_most(W));
}

Report run_env_circle(const WgLieAlgebra& g, int W, Audit& audit, const std::string& name) {
    audit.lie(name, g);
    WgAlgebra u = enveloping(g, W);
    audit.algebra("U" + name, u);
    CommutativeModel s1 = circle_model();
    audit.model("S1", s1);
    WgLieAlgebra maps = mapping_lie(s1, g);
    audit.lie("Map(S1," + name + ")", maps);
    BettiTable a = audited_homology(audit, "HH(U" + name + ")", cyclic_bar(u, W), W);
    BettiTable b = audited_homology(audit, "CE(Map(S1," + name + "))", ce_chains(maps, W), W);
    return compare_routes("env-circle:" + name, {{"HH(Ug)", a}, {"C^Lie_*(H(S1) (x) g)", b}}, Window::abs_at_most(W));
}

Report run_coh_circle(const WgLieAlgebra& g, int W, Audit& audit, const std::string& name) {
    audit.lie(name, g);
    WgAlgebra c = ce_cochains(g, W);
    audit.algebra("C*(" + name + ")", c);
    CommutativeModel s1 = circle_model();
    audit.model("S1", s1);
    WgLieAlgebra maps = mapping_lie(s1, g);
    audit.lie("Map(S1," + name + ")", maps);
    WgAlgebra cm = ce_cochains(maps, W);
    audit.algebra("C*(Map(S1," + name + "))", cm);
    BettiTable a = audited_homology(audit, "HH(C*(" + name + "))", cyclic_bar(c, W), W);
    BettiTable b = audited_homology(audit, "C*(Map(S1," + name + "))", cm.carrier(), W);
    return compare_routes("coh-circle:" + name, {{"HH(C*g)", a}, {"C^*_Lie(H(S1) (x) g)", b}}, Window::abs_at_most(W));
}

// ---------------------------------------------------------------- algebra checks

Report run_circle_hochschild(const AlgebraPtr& a, int W, Audit& audit, const std::string& name) {
    audit.algebra(name, *a);
    std::vector<Route> routes;
    routes.push_back({"cyclic bar", audited_homology(audit, "cyclic_bar(" + name + ")", cyclic_bar(*a, W), W)});
    auto [ae, factors] = algebra_tensor_factors(*a, opposite(*a));
    auto aep = std::make_shared<const WgAlgebra>(std::move(ae));
    audit.algebra(name + " (x) " + name + "^op", *aep);
    WgModule right = hochschild_module(a, aep, factors, Side::Right);
    WgModule left = hochschild_module(a, aep, factors, Side::Left);
    audit.module(name + " as right module", right);
    audit.module(name + " as left module", left);
    routes.push_back({"A (x)_{A (x) A^op} A", audited_homology(audit, "B(" + name + ", Ae, " + name + ")",
                                                               two_sided_bar(right, aep, left, W), W)});
    if (a->commutative()) {
        FiniteSimplicialSet circle = builtin_model("circle", static_cast<std::size_t>(default_level_cap(
                                                                 builtin_model("circle"), *a, W)) + 2);
        audit.simplicial("circle", circle);
        routes.push_back({"space_tensor(circle)", audited_homology(audit, "circle (x) " + name,
                                                                   space_tensor(circle, *a, W), W)});
    }
    return compare_routes("circle-hochschild:" + name, std::move(routes), Window::abs_at_most(W));
}

Report run_sym_tensor(const std::string& model, const GradedSpacePresentation& v, int W, Audit& audit,
                      const std::string& name) {
    FiniteSimplicialSet x = builtin_model(model, 4);
    audit.simplicial(model, x);
    BettiTable hx = simplicial_homology(x);
    std::vector<GradedGenerator> gens;
    for (const auto& [slot, dim] : hx.entries())
        for (std::size_t copy = 0; copy < dim; ++copy)
            for (const auto& g : v.generators)
                gens.push_back({g.name + "@" + std::to_string(slot.degree) + "." + std::to_string(copy), g.weight,
                                g.degree + slot.degree});
    GradedSpacePresentation plain{v.generators, {}, {}, true};
    WgAlgebra a = sym_algebra(plain, W);
    audit.algebra("Sym(" + name + ")", a);
    BettiTable tensor_side = audited_homology(audit, model + " (x) Sym(" + name + ")", space_tensor(model, a, W), W);
    return compare_routes("sym-tensor:" + model + ":" + name,
                          {{"space_tensor(" + model + ", Sym(V))", tensor_side},
                           {"Sym(H_*(" + model + ") (x) V)", sym_dimensions(gens, W)}},
                          Window::abs_at_most(W));
}

// ---------------------------------------------------------------- registry

namespace {

AlgebraPtr preset_ptr(const std::string& name, int W) {
    return std::make_shared<const WgAlgebra>(algebra_preset(name, W));
}

Report run_reassociation(const std::string& name, int W, Audit& audit) {
    CoefficientAssignment c;
    AlgebraPtr a = preset_ptr(name, W);
    audit.algebra(name, *a);
    c.bind("A", a);
    std::vector<std::pair<std::string, TableProducer>> routes;
    for (std::string expr : {"glue(unit; A; glue(A; A; unit))", "glue(glue(unit; A; A); A; unit)",
                             "glue(unit; A; unit)"})
        routes.emplace_back(expr, [&, expr] {
            return audited_homology(audit, expr, evaluate_complex(parse_gluing(expr), c, W), W);
        });
    return check_independence(routes, W, "excision-reassociation:" + name);
}

Report run_splitting_vs_free(int n, std::size_t k, int W, Audit& audit) {
    CommutativeModel m = euclidean_model(n);
    auto v = generators(k);
    return compare_routes("splitting-vs-free:n" + std::to_string(n) + "-dim" + std::to_string(k),
                          {{"C^Lie_*(Map_c(R^n, FreeLie))", conf_labeled_homology(m, n, v, W, &audit)},
                           {"Free_n(V) via PBW", free_en_dims(n, v, W)}},
                          Window::abs_at_most(W));
}

Report run_splitting_circle(std::size_t k, int W, Audit& audit) {
    CommutativeModel m = circle_model();
    auto v = generators(k);
    WgAlgebra t = tensor_algebra(v, W);
    audit.algebra("T(V)", t);
    return compare_routes("splitting-vs-free:circle-dim" + std::to_string(k),
                          {{"C^Lie_*(Map(S1, FreeLie))", conf_labeled_homology(m, 1, v, W, &audit)},
                           {"HH(T(V))", audited_homology(audit, "HH(T(V))", cyclic_bar(t, W), W)}},
                          Window::abs_at_most(W));
}

/// Unordered configurations of the plane with one label: rational homology
/// of the braid group B_w is Q in degrees 0 and 1 for w >= 2.
Report run_braid(int W, Audit& audit) {
    auto v = generators(1);
    BettiTable braid;
    braid.set({0, 0}, 1);
    for (int w = 1; w <= W; ++w) {
        braid.set({w, 0}, 1);
        if (w >= 2) braid.set({w, 1}, 1);
    }
    CommutativeModel m = euclidean_model(2);
    return compare_routes("splitting-vs-free:braid",
                          {{"Free_2(x) via PBW", free_en_dims(2, v, W)},
                           {"C^Lie_*(Map_c(R^2, FreeLie))", conf_labeled_homology(m, 2, v, W, &audit)},
                           {"H_*(B_w; Q)", braid}},
                          Window::abs_at_most(W));
}

std::vector<RegisteredCheck> build_registry() {
    std::vector<RegisteredCheck> out;
    for (std::string a : {"poly", "exterior", "truncated", "tensor1", "tensor2", "sym-mixed"})
        out.push_back({"circle-hochschild:" + a,
                       [a](int W, Audit& audit) { return run_circle_hochschild(preset_ptr(a, W), W, audit, a); }});
    for (std::string model : {"point", "circle", "sphere2", "torus"}) {
        for (std::size_t k : {1, 2})
            out.push_back({"sym-tensor:" + model + ":dim" + std::to_string(k), [model, k](int W, Audit& audit) {
                               return run_sym_tensor(model, generators(k), W, audit, "dim" + std::to_string(k));
                           }});
        out.push_back({"sym-tensor:" + model + ":mixed", [model](int W, Audit& audit) {
                           return run_sym_tensor(model, algebra_presentation("sym-mixed"), W, audit, "mixed");
                       }});
    }
    for (int n = 1; n <= 3; ++n)
        for (std::size_t k = 1; k <= 3; ++k)
            out.push_back({"bar-free:n" + std::to_string(n) + "-dim" + std::to_string(k),
                           [n, k](int W, Audit& audit) { return check_bar_free(n, generators(k), W, &audit); }});
    for (std::size_t k = 1; k <= 2; ++k)
        out.push_back({"bar-free:sym-dim" + std::to_string(k),
                       [k](int W, Audit& audit) { return check_bar_sym(generators(k), W, &audit); }});
    for (auto [n, m] : {std::pair{1, 0}, {2, 1}, {3, 1}, {3, 2}})
        out.push_back({"splits:" + std::to_string(n) + "-" + std::to_string(m),
                       [n, m](int W, Audit& audit) { return check_splits(n, m, generators(1), W, &audit); }});
    for (int n = 1; n <= 3; ++n)
        for (std::size_t k = 1; k <= 2; ++k)
            out.push_back({"splitting-vs-free:n" + std::to_string(n) + "-dim" + std::to_string(k),
                           [n, k](int W, Audit& audit) { return run_splitting_vs_free(n, k, W, audit); }});
    for (std::size_t k = 1; k <= 2; ++k)
        out.push_back({"splitting-vs-free:circle-dim" + std::to_string(k),
                       [k](int W, Audit& audit) { return run_splitting_circle(k, W, audit); }});
    out.push_back({"splitting-vs-free:braid", [](int W, Audit& audit) { return run_braid(W, audit); }});
    for (const auto& g : lie_preset_names()) {
        out.push_back({"hoch-duality:" + g,
                       [g](int W, Audit& audit) { return run_hoch_duality(lie_preset(g, W), W, audit, g); }});
        out.push_back({"env-circle:" + g,
                       [g](int W, Audit& audit) { return run_env_circle(lie_preset(g, W), W, audit, g); }});
        out.push_back({"coh-circle:" + g,
                       [g](int W, Audit& audit) { return run_coh_circle(lie_preset(g, W), W, audit, g); }});
    }
    for (std::string a : {"poly", "truncated", "tensor2"})
        out.push_back({"excision-reassociation:" + a,
                       [a](int W, Audit& audit) { return run_reassociation(a, W, audit); }});
    return out;
}

bool matches(const std::string& selector, const std::string& id) {
    if (selector == "all" || selector == id) return true;
    if (id.compare(0, selector.size(), selector) == 0 && id.size() > selector.size() && id[selector.size()] == ':')
        return true;
    return selector.find('*') != std::string::npos && fnmatch(selector.c_str(), id.c_str(), 0) == 0;
}

}  // namespace

const std::vector<RegisteredCheck>& registry() {
    static const std::vector<RegisteredCheck> checks = build_registry();
    return checks;
}

std::vector<const RegisteredCheck*> select_checks(const std::vector<std::string>& selectors) {
    std::vector<const RegisteredCheck*> out;
    std::set<std::string> taken;
    for (const auto& s : selectors) {
        bool any = false;
        for (const auto& check : registry())
            if (matches(s, check.id)) {
                any = true;
                if (taken.insert(check.id).second) out.push_back(&check);
            }
        if (!any) throw Error(ErrorKind::Input, "selector '" + s + "' matches no check");
    }
    return out;
}

bool VerifyRun::pass() const {
    for (const auto& r : reports)
        if (!r.pass()) return false;
    return true;
}

nlohmann::json VerifyRun::to_json() const {
    nlohmann::json j;
    j["max_weight"] = max_weight;
    j["status"] = pass() ? "PASS" : "FAIL";
    j["audited_objects"] = audited;
    j["checks"] = nlohmann::json::array();
    for (const auto& r : reports) j["checks"].push_back(r.to_json());
    return j;
}

VerifyRun run_checks(const std::vector<const RegisteredCheck*>& checks, int W) {
    if (W < 0) throw Error(ErrorKind::Input, "max weight must be >= 0");
    VerifyRun run;
    run.max_weight = W;
    Audit audit;
    for (const auto* check : checks) {
        Report r = check->run(W, audit);
        r.id = check->id;
        run.reports.push_back(std::move(r));
    }
    run.audited = audit.count();
    return run;
}

VerifyRun run_all(int W) { return run_checks(select_checks({"all"}), W); }

}  // namespace fachom
