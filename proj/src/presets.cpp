#include "fachom/presets.hpp"

#include "fachom/errors.hpp"

#include <functional>
#include <map>

namespace fachom {

namespace {

GradedSpacePresentation lie(std::vector<GradedGenerator> gens, std::vector<BracketSpec> brackets) {
    GradedSpacePresentation p;
    p.generators = std::move(gens);
    p.brackets = std::move(brackets);
    return p;
}

const std::map<std::string, std::function<GradedSpacePresentation()>>& algebra_table() {
    static const std::map<std::string, std::function<GradedSpacePresentation()>> table = {
        {"poly", [] { return GradedSpacePresentation{{{"x", 1, 0}}, {}, {}, true}; }},
        {"poly2", [] { return GradedSpacePresentation{{{"x", 1, 0}, {"y", 1, 0}}, {}, {}, true}; }},
        {"exterior", [] { return GradedSpacePresentation{{{"e", 1, 1}}, {}, {}, true}; }},
        {"truncated",
         [] {
             GradedSpacePresentation p{{{"x", 1, 0}}, {}, {}, true};
             p.relations.push_back({{{"x", "x", "x"}, Rational(1)}});
             return p;
         }},
        {"tensor1", [] { return GradedSpacePresentation{{{"x", 1, 0}}, {}, {}, false}; }},
        {"tensor2", [] { return GradedSpacePresentation{{{"x", 1, 0}, {"y", 1, 0}}, {}, {}, false}; }},
        {"tensor3", [] { return GradedSpacePresentation{{{"x", 1, 0}, {"y", 1, 0}, {"z", 1, 0}}, {}, {}, false}; }},
        {"sym-mixed", [] { return GradedSpacePresentation{{{"x", 1, 0}, {"e", 1, 1}}, {}, {}, true}; }},
    };
    return table;
}

const std::map<std::string, std::function<GradedSpacePresentation()>>& lie_table() {
    static const std::map<std::string, std::function<GradedSpacePresentation()>> table = {
        {"abelian1", [] { return lie({{"x", 1, 0}}, {}); }},
        {"abelian2", [] { return lie({{"x", 1, 0}, {"y", 1, 0}}, {}); }},
        {"abelian3", [] { return lie({{"x", 1, 0}, {"y", 1, 0}, {"z", 1, 0}}, {}); }},
        {"heisenberg", [] { return lie({{"x", 1, 0}, {"y", 1, 0}, {"z", 2, 0}}, {{"x", "y", {{"z", Rational(1)}}}}); }},
        // literally the Heisenberg relations; kept under its corpus name
        {"filiform112", [] { return lie({{"x", 1, 0}, {"y", 1, 0}, {"z", 2, 0}}, {{"x", "y", {{"z", Rational(1)}}}}); }},
        {"filiform",
         [] {
             return lie({{"x", 1, 0}, {"y", 1, 0}, {"z", 2, 0}, {"u", 3, 0}},
                        {{"x", "y", {{"z", Rational(1)}}}, {"x", "z", {{"u", Rational(1)}}}});
         }},
    };
    return table;
}

template <class Table>
std::vector<std::string> keys(const Table& t) {
    std::vector<std::string> out;
    for (const auto& [k, v] : t) out.push_back(k);
    return out;
}

}  // namespace

GradedSpacePresentation algebra_presentation(const std::string& name) {
    auto it = algebra_table().find(name);
    if (it == algebra_table().end()) throw Error(ErrorKind::Input, "unknown algebra preset '" + name + "'");
    return it->second();
}

GradedSpacePresentation lie_presentation(const std::string& name) {
    auto it = lie_table().find(name);
    if (it == lie_table().end()) throw Error(ErrorKind::Input, "unknown Lie algebra preset '" + name + "'");
    return it->second();
}

std::vector<std::string> algebra_preset_names() { return keys(algebra_table()); }
std::vector<std::string> lie_preset_names() { return keys(lie_table()); }

WgAlgebra algebra_preset(const std::string& name, int W) {
    return algebra_from_presentation(algebra_presentation(name), W);
}

WgLieAlgebra lie_preset(const std::string& name, int W) { return lie_from_presentation(lie_presentation(name), W); }

GradedSpacePresentation generators(std::size_t count, int degree, int weight) {
    GradedSpacePresentation p;
    for (std::size_t i = 0; i < count; ++i) p.generators.push_back({"x" + std::to_string(i + 1), weight, degree});
    return p;
}

}  // namespace fachom
