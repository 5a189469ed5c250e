#include "fachom/errors.hpp"
#include "fachom/presets.hpp"
#include "fachom/verify.hpp"
#include "oracle_tables.hpp"

#include <doctest.h>

#include <set>

using namespace fachom;

namespace {

BettiTable csv(const std::string& rows) { return BettiTable::from_csv("weight,degree,dim\n" + rows); }

}  // namespace

TEST_CASE("HH of enveloping algebras matches the frozen Cartan-Eilenberg oracle") {
    for (const auto& [name, cells] : oracle::hh_ug_tables()) {
        auto u = enveloping(lie_preset(name, 4), 4);
        CAPTURE(name);
        CHECK(homology(cyclic_bar(u, 4)) == oracle::parse_cells(cells));
    }
}

TEST_CASE("Lie routes agree with each other") {
    Audit audit;
    for (std::string name : {"abelian2", "heisenberg", "filiform"}) {
        auto g = lie_preset(name, 3);
        CAPTURE(name);
        CHECK(run_hoch_duality(g, 3, audit, name).pass());
        CHECK(run_env_circle(g, 3, audit, name).pass());
        CHECK(run_coh_circle(g, 3, audit, name).pass());
    }
    CHECK(audit.count() > 0);
}

TEST_CASE("registry selection") {
    const auto& all = registry();
    CHECK(select_checks({"all"}).size() == all.size());
    CHECK(select_checks({"hoch-duality"}).size() == lie_preset_names().size());
    CHECK(select_checks({"splits:*"}).size() == 4);
    auto exact = select_checks({"splits:2-1"});
    REQUIRE(exact.size() == 1);
    CHECK(exact[0]->id == "splits:2-1");
    // duplicates collapse, order follows the selectors
    auto both = select_checks({"splits:3-1", "splits:2-1", "splits:2-1"});
    REQUIRE(both.size() == 2);
    CHECK(both[0]->id == "splits:3-1");
    try {
        select_checks({"no-such-check"});
        FAIL("expected Input");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Input);
    }
    std::set<std::string> ids;
    for (const auto& c : all) CHECK(ids.insert(c.id).second);
}

TEST_CASE("an empty run passes") {
    auto run = run_checks({}, 3);
    CHECK(run.pass());
    CHECK(run.reports.empty());
    CHECK(run.to_json()["checks"].empty());
}

TEST_CASE("runs are deterministic") {
    auto checks = select_checks({"circle-hochschild", "bar-free:n2-*", "env-circle:heisenberg"});
    auto a = run_checks(checks, 3).to_json().dump();
    auto b = run_checks(checks, 3).to_json().dump();
    CHECK(a == b);
}

TEST_CASE("the whole registry passes at weight 3") {
    auto run = run_all(3);
    for (const auto& r : run.reports) {
        CAPTURE(r.summary());
        CHECK(r.pass());
    }
    CHECK(run.audited > 0);
    CHECK(run.pass());
}

TEST_CASE("a flipped CE sign is caught with its slot") {
    // on a free Lie algebra d^2 = 0 needs Jacobi, so single terms matter
    auto c = ce_chains(free_lie(generators(2), 1, 4), 4);
    c.check_square_zero();
    bool caught = false;
    for (std::size_t i = 0; i < c.size() && !caught; ++i) {
        for (const auto& [j, coef] : c.d(i)) {
            std::vector<LinComb> d;
            for (std::size_t k = 0; k < c.size(); ++k) d.push_back(c.d(k));
            d[i][j] = -coef;
            ChainComplex broken(c.space(), std::move(d));
            try {
                broken.check_square_zero();
            } catch (const Error& e) {
                CHECK(e.kind() == ErrorKind::DifferentialSquareNonzero);
                CHECK(std::string(e.what()).find("slot (") != std::string::npos);
                caught = true;
                break;
            }
        }
    }
    CHECK(caught);
}

TEST_CASE("audits reject inconsistent homology") {
    Audit audit;
    auto a = algebra_preset("poly", 3);
    auto h = homology(a.carrier());
    audit.complex("poly", a.carrier(), h, Window::abs_at_most(3));
    CHECK(audit.count() == 1);
    CHECK_THROWS_AS(audit.complex("poly", a.carrier(), csv("0,0,1\n"), Window::abs_at_most(3)), Error);

    CHECK_NOTHROW(audit.algebra("poly", a));
    CHECK_NOTHROW(audit.lie("heisenberg", lie_preset("heisenberg", 3)));
    CHECK_NOTHROW(audit.simplicial("torus", builtin_model("torus", 4)));
    CHECK_NOTHROW(audit.model("S1", circle_model()));
    CHECK(audit.log().size() == audit.count());
}

TEST_CASE("reports serialize their divergence") {
    auto report = compare_routes(
        "control", {{"left", csv("0,0,1\n1,1,2\n")}, {"right", csv("0,0,1\n1,1,3\n")}}, Window::abs_at_most(2));
    CHECK_FALSE(report.pass());
    auto j = report.to_json();
    CHECK(j["status"] == "FAIL");
    CHECK(j["comparisons"][0]["first_divergence"]["degree"] == 1);
    CHECK(report.summary().find("(1,1)") != std::string::npos);
}
