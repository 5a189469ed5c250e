#include "fachom/bar.hpp"
#include "fachom/errors.hpp"
#include "fachom/presets.hpp"

#include <doctest.h>

using namespace fachom;

namespace {

AlgebraPtr preset(const std::string& name, int W) { return std::make_shared<const WgAlgebra>(algebra_preset(name, W)); }

BettiTable csv(const std::string& rows) { return BettiTable::from_csv("weight,degree,dim\n" + rows); }

long long power(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

long long gcd(long long a, long long b) { return b == 0 ? a : gcd(b, a % b); }

/// Necklaces of length w over k letters: (1/w) sum_{j<w} k^{gcd(j,w)}.
long long necklaces(int k, int w) {
    long long s = 0;
    for (int j = 0; j < w; ++j) s += power(k, static_cast<int>(gcd(j, w)));
    return s / w;
}

BettiTable circle_route(const AlgebraPtr& a, int W) {
    auto [ae, factors] = algebra_tensor_factors(*a, opposite(*a));
    auto aep = std::make_shared<const WgAlgebra>(std::move(ae));
    auto left = hochschild_module(a, aep, factors, Side::Left);
    auto right = hochschild_module(a, aep, factors, Side::Right);
    validate(left);
    validate(right);
    return relative_tensor(right, aep, left, W);
}

}  // namespace

TEST_CASE("bar of a tensor algebra is Q + V[1]") {
    for (std::size_t k = 1; k <= 3; ++k) {
        auto a = std::make_shared<const WgAlgebra>(tensor_algebra(generators(k), 5));
        BettiTable expected;
        expected.set({0, 0}, 1);
        expected.set({1, 1}, k);
        CHECK(homology(bar(a, 5)) == expected);
    }
}

TEST_CASE("B(A, A, A) has the homology of A") {
    for (const auto& name : algebra_preset_names()) {
        auto a = preset(name, 4);
        auto reg = regular_module(a);
        validate(reg);
        CAPTURE(name);
        CHECK(relative_tensor(reg, a, reg, 4) == homology(a->carrier()));
    }
}

TEST_CASE("bar of Sym(x) is Sym of an odd class") {
    auto a = preset("poly", 5);
    CHECK(homology(bar(a, 5)) == csv("0,0,1\n1,1,1\n"));
}

TEST_CASE("bar of Lambda(xi) is a polynomial ring on a degree-2 class") {
    auto a = preset("exterior", 5);
    CHECK(homology(bar(a, 5)) == csv("0,0,1\n1,2,1\n2,4,1\n3,6,1\n4,8,1\n5,10,1\n"));
}

TEST_CASE("bar and cyclic bar of the ground field") {
    auto q = std::make_shared<const WgAlgebra>(unit_algebra());
    CHECK(homology(bar(q, 3)) == csv("0,0,1\n"));
    CHECK(homology(cyclic_bar(*q, 3)) == csv("0,0,1\n"));
}

TEST_CASE("HKR: Hochschild homology of Q[x]") {
    auto a = preset("poly", 5);
    BettiTable expected;
    expected.set({0, 0}, 1);
    for (int w = 1; w <= 5; ++w) {
        expected.set({w, 0}, 1);
        expected.set({w, 1}, 1);
    }
    CHECK(homology(cyclic_bar(*a, 5)) == expected);
}

TEST_CASE("Hochschild homology of Lambda(xi) is Lambda(xi) (x) Gamma(s xi)") {
    auto a = preset("exterior", 4);
    BettiTable expected;
    expected.set({0, 0}, 1);
    for (int w = 1; w <= 4; ++w) {
        expected.set({w, 2 * w - 1}, 1);
        expected.set({w, 2 * w}, 1);
    }
    CHECK(homology(cyclic_bar(*a, 4)) == expected);
}

TEST_CASE("Hochschild homology of a tensor algebra counts necklaces") {
    for (int k = 1; k <= 3; ++k) {
        int W = k == 3 ? 3 : 4;
        auto a = std::make_shared<const WgAlgebra>(tensor_algebra(generators(k), W));
        auto h = homology(cyclic_bar(*a, W));
        BettiTable expected;
        expected.set({0, 0}, 1);
        for (int w = 1; w <= W; ++w) {
            expected.set({w, 0}, static_cast<std::size_t>(necklaces(k, w)));
            expected.set({w, 1}, static_cast<std::size_t>(necklaces(k, w)));
        }
        CAPTURE(k);
        CHECK(h == expected);
    }
    auto t2 = std::make_shared<const WgAlgebra>(tensor_algebra(generators(2), 2));
    CHECK(homology(cyclic_bar(*t2, 2)).restricted(Window{2, 2}) == csv("2,0,3\n2,1,3\n"));
}

TEST_CASE("HH_0 of a commutative algebra is the algebra") {
    for (std::string name : {"poly", "poly2", "truncated", "sym-mixed", "exterior"}) {
        auto a = preset(name, 4);
        auto h = homology(cyclic_bar(*a, 4));
        BettiTable zero_row = h.restricted(Window::all(), Window{0, 0});
        CHECK(zero_row == a->space().dimensions().restricted(Window::all(), Window{0, 0}));
    }
}

TEST_CASE("circle as A (x)_{A (x) A^op} A equals the cyclic bar") {
    for (const auto& name : algebra_preset_names()) {
        int W = name == "tensor3" ? 3 : 4;
        auto a = preset(name, W);
        CAPTURE(name);
        CHECK(circle_route(a, W) == homology(cyclic_bar(*a, W)));
    }
}

TEST_CASE("enveloping algebras also satisfy the circle identity") {
    for (std::string name : {"heisenberg", "filiform"}) {
        auto u = std::make_shared<const WgAlgebra>(enveloping(lie_preset(name, 4), 4));
        CHECK(circle_route(u, 4) == homology(cyclic_bar(*u, 4)));
    }
}

TEST_CASE("relative tensor with a free module") {
    auto t = std::make_shared<const WgAlgebra>(tensor_algebra(generators(2), 4));
    CHECK(relative_tensor(trivial_module(t), t, regular_module(t), 4) == csv("0,0,1\n"));
    CHECK(relative_tensor(regular_module(t), t, trivial_module(t), 4) == csv("0,0,1\n"));
}

TEST_CASE("two-sided bar module keeps the outer actions") {
    auto a = preset("poly", 4);
    auto m = two_sided_bar_module(regular_module(a), a, regular_module(a), 4);
    validate(m);
    CHECK(m.left_algebra() == a);
    CHECK(m.right_algebra() == a);
}

TEST_CASE("bar constructions reject mismatched roles") {
    auto a = preset("poly", 3), b = preset("poly", 3);
    try {
        two_sided_bar(regular_module(a), b, regular_module(b), 3);
        FAIL("expected RoleMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::RoleMismatch);
    }
}

TEST_CASE("a weight-0 augmentation ideal is unbounded") {
    BigradedSpace s;
    s.add("1", 0, 0);
    s.add("e", 0, 1);
    WgAlgebra a(ChainComplex(std::move(s)), 0, true, 3);
    try {
        cyclic_bar(a, 3);
        FAIL("expected UnboundedWeight");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnboundedWeight);
    }
}

TEST_CASE("the bar window cannot exceed the algebra truncation") {
    auto a = preset("poly", 2);
    CHECK_THROWS_AS(cyclic_bar(*a, 3), Error);
}

TEST_CASE("bar complexes vanish above simplicial level |w|") {
    auto a = preset("tensor2", 4);
    auto c = bar(a, 4);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto& label = c.space()[i].label;
        auto bars = std::count(label.begin(), label.end(), '|');
        int level = label.find("[]") != std::string::npos ? 0 : static_cast<int>(bars) + 1;
        CHECK(level <= std::abs(c.space()[i].weight));
    }
}

TEST_CASE("negative weights: bar of CE cochains") {
    auto c = std::make_shared<const WgAlgebra>(ce_cochains(lie_preset("abelian1", 4), 4));
    // C*(abelian1) = Lambda(phi) with phi at (-1,-1); its bar is Gamma on (-1, 0)
    CHECK(homology(bar(c, 4)) == csv("0,0,1\n-1,0,1\n-2,0,1\n-3,0,1\n-4,0,1\n"));
}
