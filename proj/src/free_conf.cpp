#include "fachom/free_conf.hpp"

#include "fachom/bar.hpp"
#include "fachom/errors.hpp"

namespace fachom {

namespace {

void check_positive(const GradedSpacePresentation& v) {
    if (common_weight_sign(v.generators) < 0)
        throw Error(ErrorKind::MixedWeightSigns, "free algebras need strictly positive generator weights");
}

BettiTable lie_dimensions(const WgLieAlgebra& g, int shift) {
    BettiTable t;
    for (std::size_t i = 0; i < g.size(); ++i) t.add({g.space()[i].weight, g.space()[i].degree + shift}, 1);
    return t;
}

BettiTable measured(Audit* audit, const std::string& what, const ChainComplex& c, int W) {
    return audit ? audited_homology(*audit, what, c, W) : homology(c, Window::abs_at_most(W));
}

WgLieAlgebra checked(Audit* audit, const std::string& what, WgLieAlgebra g) {
    if (audit) audit->lie(what, g);
    return g;
}

}  // namespace

GradedSpacePresentation shifted(const GradedSpacePresentation& v, int k) {
    GradedSpacePresentation out = v;
    for (auto& g : out.generators) g.degree += k;
    return out;
}

DimTable free_en_dims(int n, const GradedSpacePresentation& v, int W) {
    if (n < 1) throw Error(ErrorKind::Input, "free_en_dims needs n >= 1");
    check_positive(v);
    return enveloping_n(free_lie(v, n, W), n, W);
}

DimTable conf_labeled_homology(const CommutativeModel& m, int n, const GradedSpacePresentation& v, int W,
                               Audit* audit) {
    if (n < 1) throw Error(ErrorKind::Input, "conf_labeled_homology needs n >= 1");
    check_positive(v);
    if (audit) audit->model(m.name, m);
    WgLieAlgebra free = checked(audit, "FreeLie(V[" + std::to_string(n - 1) + "])", free_lie(v, n, W));
    WgLieAlgebra g = checked(audit, "Map(" + m.name + ", FreeLie)", mapping_lie(m, free));
    return measured(audit, "CE(Map(" + m.name + ", FreeLie))", ce_chains(g, W), W);
}

Report check_splits(int n, int m, const GradedSpacePresentation& v, int W, Audit* audit) {
    if (m < 0 || m >= n)
        throw Error(ErrorKind::InvalidCodim, "splitting S^" + std::to_string(m) + " x R^" + std::to_string(n - m) +
                                                 " needs 0 <= m < n (got m = " + std::to_string(m) +
                                                 ", n = " + std::to_string(n) + ")");
    DimTable lhs = conf_labeled_homology(sphere_model(m, n - m), n, v, W, audit);
    DimTable rhs = convolve(free_en_dims(n, v, W), free_en_dims(n - m, shifted(v, m), W), Window::abs_at_most(W));
    return compare_routes("splits:" + std::to_string(n) + "-" + std::to_string(m),
                          {{"lie-model S" + std::to_string(m) + "xR" + std::to_string(n - m), std::move(lhs)},
                           {"Free_" + std::to_string(n) + " (x) Free_" + std::to_string(n - m) + "(V[" +
                                std::to_string(m) + "])",
                            std::move(rhs)}},
                          Window::abs_at_most(W));
}

Report check_bar_free(int n, const GradedSpacePresentation& v, int W, Audit* audit) {
    if (n < 1) throw Error(ErrorKind::Input, "check_bar_free needs n >= 1");
    check_positive(v);
    std::string id = "bar-free:n" + std::to_string(n) + "-dim" + std::to_string(v.generators.size());
    Window window = Window::abs_at_most(W);
    if (n == 1) {
        GradedSpacePresentation plain{v.generators, {}, {}, false};
        auto a = std::make_shared<const WgAlgebra>(tensor_algebra(plain, W));
        if (audit) audit->algebra("T(V)", *a);
        BettiTable expected;
        expected.set({0, 0}, 1);
        for (const auto& g : v.generators)
            if (std::abs(g.weight) <= W) expected.add({g.weight, g.degree + 1}, 1);
        return compare_routes(id, {{"bar(T(V))", measured(audit, "bar(T(V))", bar(a, W), W)}, {"Q + V[1]", expected}}, window);
    }
    WgLieAlgebra lhs = checked(audit, "FreeLie(V[n-1])", free_lie(v, n, W));
    WgLieAlgebra rhs = checked(audit, "FreeLie((V[1])[n-2])", free_lie(shifted(v, 1), n - 1, W));
    // in the degrees of the shifted generators both sides are FreeLie(V[n-1])
    Report lie = compare_routes(id, {{"FreeLie(V[n-1])", lie_dimensions(lhs, 0)},
                                     {"FreeLie((V[1])[n-2])", lie_dimensions(rhs, 0)}},
                                window);
    // the same identity fed through Sym: Sym(FreeLie(V[n-1])[2-n]) = Free_{n-1}(V[1])
    Report sym = compare_routes(id, {{"Sym(FreeLie(V[n-1])[2-n])", enveloping_n(lhs, n - 1, W)},
                                     {"Free_{n-1}(V[1])", free_en_dims(n - 1, shifted(v, 1), W)}},
                                window);
    for (auto& r : sym.routes) lie.routes.push_back(std::move(r));
    for (auto& c : sym.comparisons) lie.comparisons.push_back(std::move(c));
    return lie;
}

Report check_bar_sym(const GradedSpacePresentation& v, int W, Audit* audit) {
    check_positive(v);
    GradedSpacePresentation plain{v.generators, {}, {}, true};
    auto a = std::make_shared<const WgAlgebra>(sym_algebra(plain, W));
    if (audit) audit->algebra("Sym(V)", *a);
    Window window = Window::abs_at_most(W);
    return compare_routes("bar-sym:dim" + std::to_string(v.generators.size()),
                          {{"bar(Sym(V))", measured(audit, "bar(Sym(V))", bar(a, W), W)},
                           {"Sym(V[1])", sym_dimensions(shifted(v, 1).generators, W)}},
                          window);
}

}  // namespace fachom
