#include "fachom/errors.hpp"
#include "fachom/excision.hpp"
#include "fachom/presets.hpp"

#include <doctest.h>

using namespace fachom;

namespace {

AlgebraPtr preset(const std::string& name, int W) { return std::make_shared<const WgAlgebra>(algebra_preset(name, W)); }

BettiTable csv(const std::string& rows) { return BettiTable::from_csv("weight,degree,dim\n" + rows); }

ErrorKind parse_error(const std::string& text) {
    try {
        parse_gluing(text);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("parsed: " << text);
    return ErrorKind::Input;
}

std::size_t syntax_offset(const std::string& text) {
    try {
        parse_gluing(text);
    } catch (const SyntaxError& e) {
        return e.offset();
    }
    FAIL("no syntax error: " << text);
    return 0;
}

ErrorKind evaluate_error(const std::string& text, const CoefficientAssignment& c, int W) {
    try {
        evaluate(parse_gluing(text), c, W);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("evaluated: " << text);
    return ErrorKind::Input;
}

}  // namespace

TEST_CASE("parser builds the expected trees") {
    auto leaf = parse_gluing("  A ");
    CHECK(leaf.kind == GluingExpr::Kind::Leaf);
    CHECK(leaf.name == "A");
    CHECK(leaf.offset == 3);

    auto c = parse_gluing("circle(A)");
    REQUIRE(c.kind == GluingExpr::Kind::Circle);
    CHECK(c.children.at(0).name == "A");
    CHECK(c.children[0].role == Role::Algebra);

    auto g = parse_gluing("glue(glue(M;A;N) ; B ; P)");
    REQUIRE(g.kind == GluingExpr::Kind::Glue);
    CHECK(g.children[0].kind == GluingExpr::Kind::Glue);
    CHECK(g.children[0].role == Role::RightModule);
    CHECK(g.children[1].role == Role::Algebra);
    CHECK(g.children[2].role == Role::LeftModule);
    CHECK(g.children[0].children[1].name == "A");
    CHECK(g.to_string() == "glue(glue(M; A; N); B; P)");
    CHECK(parse_gluing(g.to_string()).to_string() == g.to_string());
}

TEST_CASE("syntax errors report 1-based offsets") {
    CHECK(syntax_offset("glue(M1; A") == 11);
    CHECK(syntax_offset("") == 1);
    CHECK(syntax_offset("circle(A") == 9);
    CHECK(syntax_offset("glue(M; A)") == 10);
    CHECK(syntax_offset("A B") == 3);
    CHECK(syntax_offset("glue(;A;B)") == 6);
    CHECK(parse_error("A)") == ErrorKind::SyntaxError);
}

TEST_CASE("role errors at parse time") {
    CHECK(parse_error("circle(glue(M; A; N))") == ErrorKind::RoleMismatch);
    CHECK(parse_error("circle(circle(A))") == ErrorKind::RoleMismatch);
    CHECK(parse_error("glue(circle(A); B; C)") == ErrorKind::RoleMismatch);
    CHECK(parse_error("glue(M; glue(X; A; Y); N)") == ErrorKind::RoleMismatch);
}

TEST_CASE("leaves evaluate to the homology of their value") {
    CoefficientAssignment c;
    c.bind("A", preset("poly", 4));
    CHECK(evaluate(parse_gluing("A"), c, 4) == csv("0,0,1\n1,0,1\n2,0,1\n3,0,1\n4,0,1\n"));
    CHECK(evaluate(parse_gluing("unit"), c, 4) == csv("0,0,1\n"));
}

TEST_CASE("circle of a tensor algebra at weight 2") {
    CoefficientAssignment c;
    c.bind("T", preset("tensor2", 2));
    auto h = evaluate(parse_gluing("circle(T)"), c, 2);
    CHECK(h.restricted(Window{2, 2}) == csv("2,0,3\n2,1,3\n"));
    CHECK(h == evaluate(parse_gluing("circle( T )"), c, 2));
}

TEST_CASE("circle of Q[x] is HKR") {
    CoefficientAssignment c;
    c.bind("A", preset("poly", 3));
    CHECK(evaluate(parse_gluing("circle(A)"), c, 3) == csv("0,0,1\n1,0,1\n1,1,1\n2,0,1\n2,1,1\n3,0,1\n3,1,1\n"));
}

TEST_CASE("gluing an interval to itself and reassociation") {
    for (std::string name : {"poly", "truncated", "tensor2"}) {
        CoefficientAssignment c;
        auto a = preset(name, 3);
        c.bind("A", a);
        auto base = homology(a->carrier());
        CAPTURE(name);
        CHECK(evaluate(parse_gluing("glue(A; A; A)"), c, 3) == base);
        auto left = evaluate(parse_gluing("glue(glue(A; A; A); A; A)"), c, 3);
        auto right = evaluate(parse_gluing("glue(A; A; glue(A; A; A))"), c, 3);
        CHECK(left == base);
        CHECK(right == base);
    }
}

TEST_CASE("unit as a module is the augmentation") {
    CoefficientAssignment c;
    c.bind("T", preset("tensor2", 4));
    CHECK(evaluate(parse_gluing("glue(unit; T; T)"), c, 4) == csv("0,0,1\n"));
    CHECK(evaluate(parse_gluing("glue(unit; T; unit)"), c, 4) == csv("0,0,1\n1,1,2\n"));
}

TEST_CASE("wrapping in unit gluings leaves a leaf alone") {
    for (std::string name : {"poly", "tensor2", "exterior"}) {
        CoefficientAssignment c;
        c.bind("A", preset(name, 3));
        auto leaf = evaluate(parse_gluing("A"), c, 3);
        CAPTURE(name);
        CHECK(evaluate(parse_gluing("glue(unit; unit; A)"), c, 3) == leaf);
        CHECK(evaluate(parse_gluing("glue(A; unit; unit)"), c, 3) == leaf);
        CHECK(evaluate(parse_gluing("glue(unit; unit; glue(unit; unit; A))"), c, 3) == leaf);
        CHECK(evaluate(parse_gluing("glue(A; A; A)"), c, 3) == leaf);
    }
    // a unit gluing is the plain tensor product Q[x] (x) Q[x]
    CoefficientAssignment c;
    c.bind("A", preset("poly", 2));
    CHECK(evaluate(parse_gluing("glue(A; unit; A)"), c, 2) == csv("0,0,1\n1,0,2\n2,0,3\n"));
}

TEST_CASE("explicit modules") {
    CoefficientAssignment c;
    auto a = preset("poly", 3);
    c.bind("A", a);
    c.bind("k", trivial_module(a));
    CHECK(evaluate(parse_gluing("glue(k; A; k)"), c, 3) == csv("0,0,1\n1,1,1\n"));
    CHECK(evaluate(parse_gluing("glue(A; A; k)"), c, 3) == csv("0,0,1\n"));
    CHECK(evaluate_error("circle(k)", c, 3) == ErrorKind::RoleMismatch);
    CHECK(evaluate_error("glue(k; k; k)", c, 3) == ErrorKind::RoleMismatch);
}

TEST_CASE("binding errors") {
    CoefficientAssignment c;
    c.bind("A", preset("poly", 3));
    c.bind("B", preset("poly", 3));
    CHECK(evaluate_error("circle(Z)", c, 3) == ErrorKind::RoleMismatch);
    CHECK(evaluate_error("glue(A; B; A)", c, 3) == ErrorKind::RoleMismatch);
    CHECK_THROWS_AS(c.bind("unit", preset("poly", 3)), Error);
    CHECK(c.names() == std::vector<std::string>{"A", "B"});
    CHECK(c.contains("A"));
    CHECK_FALSE(c.contains("unit"));
}

TEST_CASE("independence check passes on agreeing routes") {
    auto a = preset("truncated", 4);
    CoefficientAssignment c;
    c.bind("A", a);
    auto report = check_independence(
        {{"excision", [&] { return evaluate(parse_gluing("circle(A)"), c, 4); }},
         {"cyclic-bar", [&] { return homology(cyclic_bar(*a, 4)); }}},
        4, "circle-truncated");
    CHECK(report.pass());
    CHECK(report.summary().rfind("PASS", 0) == 0);
}

TEST_CASE("independence check catches a shifted route at the lowest slot") {
    auto a = preset("poly", 3);
    auto report = check_independence({{"honest", [&] { return homology(a->carrier()); }},
                                       {"shifted", [&] { return homology(shift(a->carrier(), 1)); }}},
                                      3, "negative-control");
    CHECK_FALSE(report.pass());
    REQUIRE(report.comparisons.size() == 1);
    REQUIRE(report.comparisons[0].slot);
    CHECK(*report.comparisons[0].slot == Slot{0, 0});
    CHECK(report.summary().rfind("FAIL", 0) == 0);
    CHECK_THROWS_AS(check_independence({{"alone", [&] { return homology(a->carrier()); }}}, 3), Error);
}
