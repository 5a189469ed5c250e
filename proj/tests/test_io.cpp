#include "fachom/errors.hpp"
#include "fachom/free_conf.hpp"
#include "fachom/io.hpp"
#include "fachom/presets.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace fachom;
using nlohmann::json;

namespace {

BettiTable csv(const std::string& rows) { return BettiTable::from_csv("weight,degree,dim\n" + rows); }

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error");
    return ErrorKind::Validation;
}

struct TempFile {
    std::filesystem::path path;
    TempFile(const std::string& name, const std::string& text)
        : path(std::filesystem::temp_directory_path() / ("fachom-test-" + name)) {
        std::ofstream(path) << text;
    }
    ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("presets survive a JSON round-trip") {
    for (const auto& name : algebra_preset_names()) {
        auto j = presentation_to_json(algebra_presentation(name), "algebra");
        auto back = presentation_from_json(json::parse(j.dump()), "algebra");
        CAPTURE(name);
        CHECK(presentation_to_json(back, "algebra") == j);
        CHECK(algebra_from_presentation(back, 3).space().dimensions() == algebra_preset(name, 3).space().dimensions());
    }
    for (const auto& name : lie_preset_names()) {
        auto j = presentation_to_json(lie_presentation(name), "lie");
        auto back = presentation_from_json(j, "lie");
        CAPTURE(name);
        CHECK(presentation_to_json(back, "lie") == j);
        CHECK(homology(ce_chains(lie_from_presentation(back, 4), 4)) == homology(ce_chains(lie_preset(name, 4), 4)));
    }
}

TEST_CASE("rational coefficients") {
    // T(x, y)/(xy - 1/2 yx): a quantum plane, Hilbert series of Q[x, y]
    auto p = presentation_from_json(json::parse(R"({
        "kind": "algebra",
        "generators": [{"name": "x", "degree": 0, "weight": 1}, {"name": "y", "degree": 0, "weight": 1}],
        "relations": [[{"word": ["x", "y"], "coef": 1}, {"word": ["y", "x"], "coef": "-1/2"}]]
    })"),
                                    "algebra");
    REQUIRE(p.relations.size() == 1);
    CHECK(p.relations[0][1].coefficient == Rational(-1, 2));
    auto a = algebra_from_presentation(p, 3);
    validate(a);
    CHECK(a.space().dimensions() == algebra_preset("poly2", 3).space().dimensions());
    CHECK(presentation_to_json(p, "algebra")["relations"][0][1]["coef"] == "-1/2");
}

TEST_CASE("malformed presentations") {
    auto lie = presentation_to_json(lie_presentation("heisenberg"), "lie");
    CHECK(kind_of([&] { presentation_from_json(lie, "algebra"); }) == ErrorKind::Input);
    CHECK(kind_of([&] { presentation_from_json(json::parse(R"({"kind": "algebra"})"), "algebra"); }) ==
          ErrorKind::Input);
    CHECK(kind_of([&] {
              presentation_from_json(json::parse(R"({"kind": "algebra", "generators": [{"name": "x", "degree": 0,
                  "weight": 1}], "relations": [[{"word": ["x"], "coef": "1/0"}]]})"),
                                     "algebra");
          }) == ErrorKind::Input);
    CHECK(kind_of([&] {
              presentation_from_json(json::parse(R"({"kind": "algebra", "generators": [{"name": "x", "degree": 0,
                  "weight": 1}], "relations": [[{"word": ["q"], "coef": 1}]]})"),
                                     "algebra");
          }) == ErrorKind::Input);
}

TEST_CASE("JSON syntax errors carry an offset") {
    try {
        parse_json("{\"kind\": ", "sample");
        FAIL("expected Input");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Input);
        CHECK(std::string(e.what()).find("sample") != std::string::npos);
    }
}

TEST_CASE("loading from files and presets") {
    TempFile f("heis.json", presentation_to_json(lie_presentation("heisenberg"), "lie").dump());
    CHECK(load_lie(f.path.string(), 3).size() == 3);
    CHECK(kind_of([&] { load_algebra(f.path.string(), 3); }) == ErrorKind::Input);
    CHECK(kind_of([&] { load_algebra("no-such-preset", 3); }) == ErrorKind::Input);
    CHECK(kind_of([&] { read_text("/nonexistent/fachom.json"); }) == ErrorKind::Input);
    CHECK(load_algebra("poly", 3).size() == 4);

    TempFile bad("bad.json", "{ not json");
    CHECK(kind_of([&] { load_algebra(bad.path.string(), 3); }) == ErrorKind::Input);
}

TEST_CASE("generator lists") {
    CHECK(load_generators("3").generators.size() == 3);
    auto g = generators_from_json(json::parse(R"([{"name": "a", "degree": 1, "weight": 2}])"));
    REQUIRE(g.generators.size() == 1);
    CHECK(g.generators[0].degree == 1);
    CHECK(g.generators[0].weight == 2);
    CHECK(kind_of([&] { load_generators("x1,x2"); }) == ErrorKind::Input);
}

TEST_CASE("commutative models from JSON") {
    auto circle = commutative_model_from_json(json::parse(R"({
        "name": "loop",
        "basis": [{"label": "1", "degree": 0}, {"label": "e", "degree": -1}],
        "products": [{"left": "1", "right": "1", "value": {"1": 1}},
                     {"left": "1", "right": "e", "value": {"e": 1}},
                     {"left": "e", "right": "1", "value": {"e": 1}}]
    })"));
    CHECK(conf_labeled_homology(circle, 2, generators(1), 3) ==
          conf_labeled_homology(circle_model(), 2, generators(1), 3));
    // e.e = 1 breaks graded commutativity (e is odd)
    CHECK(kind_of([&] {
              commutative_model_from_json(json::parse(R"({"basis": [{"label": "1", "degree": 0},
                  {"label": "e", "degree": -1}], "products": [{"left": "1", "right": "1", "value": {"1": 1}},
                  {"left": "e", "right": "e", "value": {"1": 1}}]})"));
          }) != ErrorKind::Input);
    CHECK(kind_of([&] { load_commutative_model("klein"); }) == ErrorKind::UnknownModel);
}

TEST_CASE("bindings") {
    auto c = bindings_from_json(json::parse(R"({
        "A": "poly",
        "B": {"algebra": "tensor2"},
        "M": {"module": "trivial", "over": "A"},
        "N": {"module": "regular", "over": "B"}
    })"),
                                3);
    CHECK(c.names() == std::vector<std::string>{"A", "B", "M", "N"});
    CHECK(c.algebra("A") != nullptr);
    REQUIRE(c.module("M") != nullptr);
    CHECK(c.module("M")->left_algebra() == c.algebra("A"));
    CHECK(evaluate(parse_gluing("glue(M; A; M)"), c, 3) == csv("0,0,1\n1,1,1\n"));

    CHECK(kind_of([] { bindings_from_json(json::parse(R"({"M": {"module": "trivial", "over": "Z"}})"), 3); }) ==
          ErrorKind::RoleMismatch);
    CHECK(kind_of([] { bindings_from_json(json::parse(R"({"A": "poly", "M": {"module": "free", "over": "A"}})"), 3); }) ==
          ErrorKind::Input);
    CHECK(kind_of([] { bindings_from_json(json::parse(R"(["poly"])"), 3); }) == ErrorKind::Input);
    CHECK(kind_of([] { bindings_from_json(json::parse(R"({"unit": "poly"})"), 3); }) == ErrorKind::Input);
}
