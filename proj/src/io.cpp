#include "fachom/io.hpp"

#include "fachom/errors.hpp"
#include "fachom/presets.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fachom {

using nlohmann::json;

namespace {

Rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw Error(ErrorKind::Input, "coefficients must be \"p/q\" strings or integers, got " + j.dump());
}

template <class F>
auto guarded(const std::string& what, F&& f) {
    try {
        return f();
    } catch (const json::exception& ex) {
        throw Error(ErrorKind::Input, "malformed " + what + ": " + ex.what());
    }
}

std::vector<GradedGenerator> read_generators(const json& list) {
    std::vector<GradedGenerator> gens;
    for (const auto& g : list) {
        if (!g.is_object()) throw Error(ErrorKind::Input, "generator entries must be objects");
        gens.push_back({g.at("name").get<std::string>(), g.at("weight").get<int>(), g.value("degree", 0)});
    }
    return gens;
}

json read_spec_json(const std::string& spec) { return parse_json(read_text(spec), spec); }

bool is_file(const std::string& spec) { return std::filesystem::is_regular_file(spec); }

}  // namespace

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Input, "cannot read '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

json parse_json(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& ex) {
        throw Error(ErrorKind::Input, origin + ": JSON parse error at byte " + std::to_string(ex.byte));
    }
}

GradedSpacePresentation presentation_from_json(const json& j, const std::string& expected_kind) {
    return guarded("presentation", [&] {
        if (!j.is_object()) throw Error(ErrorKind::Input, "a presentation must be a JSON object");
        std::string kind = j.value("kind", expected_kind);
        if (kind != expected_kind)
            throw Error(ErrorKind::Input, "expected a presentation of kind '" + expected_kind + "', got '" + kind + "'");
        GradedSpacePresentation p;
        p.generators = read_generators(j.at("generators"));
        p.commutative = j.value("commutative", false);
        auto known = [&](const std::string& name) {
            for (const auto& g : p.generators)
                if (g.name == name) return name;
            throw Error(ErrorKind::Input, "presentation names unknown generator '" + name + "'");
        };
        for (const auto& rel : j.value("relations", json::array())) {
            std::vector<RelationTerm> terms;
            for (const auto& t : rel) {
                auto word = t.at("word").get<std::vector<std::string>>();
                for (const auto& letter : word) known(letter);
                terms.push_back({std::move(word), rational_from_json(t.at("coef"))});
            }
            p.relations.push_back(std::move(terms));
        }
        for (const auto& b : j.value("brackets", json::array())) {
            BracketSpec spec{known(b.at("left").get<std::string>()), known(b.at("right").get<std::string>()), {}};
            for (const auto& [name, coef] : b.at("value").items())
                spec.value.emplace_back(known(name), rational_from_json(coef));
            p.brackets.push_back(std::move(spec));
        }
        return p;
    });
}

json presentation_to_json(const GradedSpacePresentation& p, const std::string& kind) {
    json j;
    j["kind"] = kind;
    j["generators"] = json::array();
    for (const auto& g : p.generators)
        j["generators"].push_back({{"name", g.name}, {"degree", g.degree}, {"weight", g.weight}});
    if (kind == "algebra") j["commutative"] = p.commutative;
    if (!p.relations.empty()) {
        j["relations"] = json::array();
        for (const auto& rel : p.relations) {
            json terms = json::array();
            for (const auto& t : rel) terms.push_back({{"word", t.word}, {"coef", format_rational(t.coefficient)}});
            j["relations"].push_back(std::move(terms));
        }
    }
    if (!p.brackets.empty()) {
        j["brackets"] = json::array();
        for (const auto& b : p.brackets) {
            json value = json::object();
            for (const auto& [name, coef] : b.value) value[name] = format_rational(coef);
            j["brackets"].push_back({{"left", b.left}, {"right", b.right}, {"value", value}});
        }
    }
    return j;
}

GradedSpacePresentation generators_from_json(const json& j) {
    return guarded("generator list", [&] {
        GradedSpacePresentation p;
        p.generators = read_generators(j.is_object() ? j.at("generators") : j);
        return p;
    });
}

CommutativeModel commutative_model_from_json(const json& j) {
    return guarded("commutative model", [&] {
        BigradedSpace space;
        for (const auto& b : j.at("basis")) space.add(b.at("label").get<std::string>(), 0, b.at("degree").get<int>());
        auto index = [&](const std::string& label) {
            for (std::size_t i = 0; i < space.size(); ++i)
                if (space[i].label == label) return i;
            throw Error(ErrorKind::Input, "model product names unknown basis element '" + label + "'");
        };
        CommutativeModel m{j.value("name", std::string("custom")), ChainComplex(space), {}};
        for (const auto& p : j.value("products", json::array())) {
            LinComb value;
            for (const auto& [label, coef] : p.at("value").items()) add_to(value, index(label), rational_from_json(coef));
            m.products[{index(p.at("left").get<std::string>()), index(p.at("right").get<std::string>())}] = value;
        }
        validate(m);
        return m;
    });
}

WgAlgebra load_algebra(const std::string& spec, int W) {
    GradedSpacePresentation p = is_file(spec) ? presentation_from_json(read_spec_json(spec), "algebra")
                                              : algebra_presentation(spec);
    WgAlgebra a = algebra_from_presentation(p, W);
    validate(a);
    return a;
}

WgLieAlgebra load_lie(const std::string& spec, int W) {
    GradedSpacePresentation p =
        is_file(spec) ? presentation_from_json(read_spec_json(spec), "lie") : lie_presentation(spec);
    WgLieAlgebra g = lie_from_presentation(p, W);
    validate(g);
    return g;
}

CommutativeModel load_commutative_model(const std::string& spec) {
    if (is_file(spec)) return commutative_model_from_json(read_spec_json(spec));
    return commutative_model(spec);
}

FiniteSimplicialSet load_simplicial(const std::string& spec, std::size_t level_count) {
    if (is_file(spec)) {
        FiniteSimplicialSet x = guarded("simplicial model", [&] {
            return FiniteSimplicialSet::from_json(read_spec_json(spec), std::filesystem::path(spec).stem().string());
        });
        check_simplicial_identities(x);
        return x;
    }
    return builtin_model(spec, level_count);
}

GradedSpacePresentation load_generators(const std::string& spec) {
    if (is_file(spec)) return generators_from_json(read_spec_json(spec));
    std::size_t used = 0;
    int count = -1;
    try {
        count = std::stoi(spec, &used);
    } catch (const std::exception&) {
    }
    if (count < 0 || used != spec.size())
        throw Error(ErrorKind::Input, "generators must be a count or a JSON file, got '" + spec + "'");
    return generators(static_cast<std::size_t>(count));
}

CoefficientAssignment bindings_from_json(const json& j, int W) {
    return guarded("bindings", [&] {
        if (!j.is_object()) throw Error(ErrorKind::Input, "bindings must be a JSON object");
        CoefficientAssignment c;
        auto algebra_value = [&](const json& v) {
            GradedSpacePresentation p =
                v.is_string() ? algebra_presentation(v.get<std::string>()) : presentation_from_json(v, "algebra");
            WgAlgebra a = algebra_from_presentation(p, W);
            validate(a);
            return std::make_shared<const WgAlgebra>(std::move(a));
        };
        for (const auto& [name, v] : j.items())
            if (v.is_string() || v.contains("algebra")) c.bind(name, algebra_value(v.is_string() ? v : v.at("algebra")));
        for (const auto& [name, v] : j.items()) {
            if (v.is_string() || v.contains("algebra")) continue;
            std::string kind = v.at("module").get<std::string>();
            std::string over = v.at("over").get<std::string>();
            AlgebraPtr a = c.algebra(over);
            if (!a) throw Error(ErrorKind::RoleMismatch, "module '" + name + "' is over unbound algebra '" + over + "'");
            if (kind == "regular")
                c.bind(name, regular_module(a));
            else if (kind == "trivial")
                c.bind(name, trivial_module(a));
            else
                throw Error(ErrorKind::Input, "unknown module kind '" + kind + "' (expected regular or trivial)");
        }
        return c;
    });
}

}  // namespace fachom
