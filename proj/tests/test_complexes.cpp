#include "fachom/complexes.hpp"
#include "fachom/errors.hpp"

#include <doctest.h>

using namespace fachom;

namespace {

struct Cell {
    std::string label;
    int weight, degree;
};

/// Complex from cells and (source, target, coefficient) triples.
ChainComplex make(const std::vector<Cell>& cells, const std::vector<std::tuple<int, int, int>>& arrows) {
    BigradedSpace s;
    for (const auto& c : cells) s.add(c.label, c.weight, c.degree);
    std::vector<LinComb> d(cells.size());
    for (auto [from, to, c] : arrows) add_to(d[from], to, Rational(c));
    return ChainComplex(std::move(s), std::move(d));
}

BettiTable table(std::initializer_list<std::tuple<int, int, std::size_t>> entries) {
    BettiTable t;
    for (auto [w, d, n] : entries) t.set({w, d}, n);
    return t;
}

/// A small non-trivial complex: weight 1 has x -> y acyclic plus a free z.
ChainComplex sample() {
    return make({{"x", 1, 1}, {"y", 1, 0}, {"z", 1, 2}, {"u", 2, 0}, {"v", 2, 1}, {"t", 2, 1}},
                {{0, 1, 1}, {4, 3, 2}, {5, 3, -1}});
}

}  // namespace

TEST_CASE("homology of a zero differential is the dimension table") {
    auto c = make({{"a", 0, 0}, {"b", 1, 0}, {"c", 1, 0}, {"d", 2, 3}}, {});
    CHECK(homology(c) == c.space().dimensions());
}

TEST_CASE("a two-term acyclic complex has no homology") {
    auto c = make({{"a", 1, 1}, {"b", 1, 0}}, {{0, 1, 1}});
    CHECK(homology(c).empty());
}

TEST_CASE("Koszul complex of Sym(Q) (x) Lambda(Q[1]) is acyclic in weight 1") {
    // weight 1: x in degree 0, xi in degree 1, d xi = x; weight 0: the unit
    auto c = make({{"1", 0, 0}, {"x", 1, 0}, {"xi", 1, 1}}, {{2, 1, 1}});
    auto h = homology(c);
    CHECK(h == table({{0, 0, 1}}));
    CHECK(h.restricted(Window{1, 1}).empty());
}

TEST_CASE("differential must square to zero") {
    auto c = make({{"a", 1, 2}, {"b", 1, 1}, {"c", 1, 0}}, {{0, 1, 1}, {1, 2, 1}});
    try {
        homology(c);
        FAIL("expected DifferentialSquareNonzero");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DifferentialSquareNonzero);
        CHECK(std::string(e.what()).find("(1,2)") != std::string::npos);
    }
}

TEST_CASE("a differential leaving its slot is rejected") {
    CHECK_THROWS_AS(make({{"a", 1, 1}, {"b", 2, 0}}, {{0, 1, 1}}), Error);
}

TEST_CASE("tensor examples") {
    auto p = make({{"p", 1, 0}}, {});
    auto q = make({{"q", 1, 1}}, {});
    auto pq = tensor(p, q);
    CHECK(pq.space().dimensions() == table({{2, 1, 1}}));
    CHECK(pq.space()[0].label == "(p,q)");
    auto c = sample();
    CHECK(homology(tensor(c, unit_complex())) == homology(c));
}

TEST_CASE("Kunneth: homology of a tensor is the convolution") {
    auto a = sample();
    auto b = make({{"1", 0, 0}, {"e", 1, 1}, {"f", 1, 0}, {"g", 1, 0}}, {{1, 2, 1}});
    auto ha = homology(a), hb = homology(b);
    CHECK(homology(tensor(a, b)) == convolve(ha, hb));
    CHECK(homology(tensor(b, a)) == homology(tensor(a, b)));
    tensor(a, b).check_square_zero();
}

TEST_CASE("tensor is associative up to relabelling") {
    auto a = sample();
    auto b = make({{"e", 1, 1}, {"f", 1, 0}}, {{0, 1, 3}});
    auto c = make({{"g", 0, 0}, {"h", 1, 2}}, {});
    CHECK(homology(tensor(tensor(a, b), c)) == homology(tensor(a, tensor(b, c))));
}

TEST_CASE("dual examples") {
    CHECK(homology(dual(unit_complex())) == table({{0, 0, 1}}));
    auto c = make({{"a", 1, 0}, {"b", 1, -1}}, {{0, 1, 1}});
    CHECK(homology(dual(c)).empty());
    auto s = sample();
    auto ds = dual(s);
    ds.check_square_zero();
    CHECK(homology(ds) == homology(s).reflected());
    CHECK(ds.space()[0].label == "x^v");
    CHECK(ds.space()[0].weight == -1);
    CHECK(ds.space()[0].degree == -1);
}

TEST_CASE("double dual is the identity on finite slots") {
    auto s = sample();
    auto dd = dual(dual(s));
    for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(dd.space()[i].weight == s.space()[i].weight);
        CHECK(dd.space()[i].degree == s.space()[i].degree);
        CHECK(dd.d(i) == s.d(i));
    }
}

TEST_CASE("shift examples") {
    auto s = sample();
    auto s0 = shift(s, 0);
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(s0.d(i) == s.d(i));
    auto back = shift(shift(s, 1), -1);
    for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(back.d(i) == s.d(i));
        CHECK(back.space()[i].degree == s.space()[i].degree);
    }
    auto q = make({{"q", 1, 0}}, {});
    CHECK(homology(shift(q, 2)) == table({{1, 2, 1}}));
    auto odd = shift(s, 1);
    odd.check_square_zero();
    auto h = homology(s), h_odd = homology(odd);
    for (const auto& [slot, n] : h.entries()) CHECK(h_odd.at({slot.weight, slot.degree + 1}) == n);
}

TEST_CASE("Euler characteristic is conserved") {
    auto s = sample();
    auto h = homology(s);
    auto dims = s.space().dimensions();
    for (int w : dims.weights()) CHECK(dims.euler_characteristic(w) == h.euler_characteristic(w));
}

TEST_CASE("homology respects windows") {
    auto s = sample();
    CHECK(homology(s, Window{2, 2}) == homology(s).restricted(Window{2, 2}));
    CHECK(homology(s, Window::all(), Window{0, 0}) == homology(s).restricted(Window::all(), Window{0, 0}));
}

TEST_CASE("homology with several jobs matches one job") {
    auto a = sample();
    auto b = tensor(a, a);
    CHECK(homology(b, Window::all(), Window::all(), 4) == homology(b, Window::all(), Window::all(), 1));
}

TEST_CASE("table serialization round-trips") {
    auto t = table({{0, 0, 1}, {1, 0, 2}, {1, 1, 3}, {-2, -1, 4}});
    CHECK(BettiTable::from_json(t.to_json()) == t);
    CHECK(BettiTable::from_csv(t.to_csv()) == t);
    CHECK(t.to_csv().rfind("weight,degree,dim\n", 0) == 0);
    CHECK_THROWS_AS(BettiTable::from_csv("w,d\n"), Error);
    CHECK_THROWS_AS(BettiTable::from_csv("weight,degree,dim\n1,2\n"), Error);
}

TEST_CASE("zero entries are omitted") {
    BettiTable t;
    t.set({1, 1}, 0);
    CHECK(t.empty());
    t.add({1, 1}, 2);
    CHECK(t.at({1, 1}) == 2);
    CHECK(t.at({5, 5}) == 0);
}
