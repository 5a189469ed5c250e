#include "fachom/bar.hpp"
#include "fachom/errors.hpp"
#include "fachom/free_conf.hpp"
#include "fachom/presets.hpp"

#include <doctest.h>

#include <functional>

using namespace fachom;

namespace {

BettiTable csv(const std::string& rows) { return BettiTable::from_csv("weight,degree,dim\n" + rows); }

int mobius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    return n > 1 ? -result : result;
}

long long power(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

/// Free Lie algebra on d generators of one parity, length w. Even: Witt
/// formula. Odd: the super version with sign (-1)^{w + w/m}.
long long lie_words(int d, int w, bool odd) {
    long long s = 0;
    for (int m = 1; m <= w; ++m) {
        if (w % m != 0) continue;
        long long sign = odd && (w + w / m) % 2 != 0 ? -1 : 1;
        s += mobius(m) * sign * power(d, w / m);
    }
    return s / w;
}

/// Free_n on d degree-0 weight-1 generators: Sym of Lie words, a length-w
/// word sitting in degree (w-1)(n-1) with the generators of parity n-1.
BettiTable free_en_oracle(int n, int d, int W) {
    BettiTable out;
    if (n == 1) {
        for (int w = 0; w <= W; ++w) out.set({w, 0}, static_cast<std::size_t>(power(d, w)));
        return out;
    }
    struct Gen {
        int weight, degree;
        long long count;
    };
    std::vector<Gen> gens;
    for (int w = 1; w <= W; ++w) {
        long long c = lie_words(d, w, (n - 1) % 2 != 0);
        if (c > 0) gens.push_back({w, (w - 1) * (n - 1), c});
    }
    // Sym over gens with multiplicity: generating function product
    std::map<std::pair<int, int>, long long> poly{{{0, 0}, 1}};
    for (const auto& g : gens)
        for (long long copy = 0; copy < g.count; ++copy) {
            std::map<std::pair<int, int>, long long> next;
            int max_power = g.degree % 2 != 0 ? 1 : W / g.weight;
            for (const auto& [slot, c] : poly)
                for (int e = 0; e <= max_power && slot.first + e * g.weight <= W; ++e)
                    next[{slot.first + e * g.weight, slot.second + e * g.degree}] += c;
            poly = std::move(next);
        }
    for (const auto& [slot, c] : poly) out.set({slot.first, slot.second}, static_cast<std::size_t>(c));
    return out;
}

}  // namespace

TEST_CASE("free E_n dimensions match Lie-word counts") {
    for (int n = 1; n <= 4; ++n)
        for (int d = 1; d <= 3; ++d) {
            int W = d == 3 ? 4 : 5;
            CAPTURE(n);
            CAPTURE(d);
            CHECK(free_en_dims(n, generators(d), W) == free_en_oracle(n, d, W));
        }
}

TEST_CASE("unordered configurations in the plane") {
    // H_*(UConf_k(R^2)) = Q + Q[1] for k >= 2, a point for odd n
    CHECK(free_en_dims(2, generators(1), 4) ==
          csv("0,0,1\n1,0,1\n2,0,1\n2,1,1\n3,0,1\n3,1,1\n4,0,1\n4,1,1\n"));
    CHECK(free_en_dims(3, generators(1), 4) == csv("0,0,1\n1,0,1\n2,0,1\n3,0,1\n4,0,1\n"));
    // the braid check of the verification registry
    CHECK(free_en_dims(2, generators(1), 2).restricted(Window{2, 2}) == csv("2,0,1\n2,1,1\n"));
}

TEST_CASE("Euclidean Lie model reproduces the free E_n algebra") {
    for (int n = 1; n <= 3; ++n)
        for (int d = 1; d <= 2; ++d) {
            CAPTURE(n);
            CAPTURE(d);
            CHECK(conf_labeled_homology(euclidean_model(n), n, generators(d), 4) == free_en_dims(n, generators(d), 4));
        }
}

TEST_CASE("labeled configurations on the circle are Hochschild homology of T(V)") {
    for (int d = 1; d <= 2; ++d) {
        auto t = tensor_algebra(generators(static_cast<std::size_t>(d)), 4);
        CHECK(conf_labeled_homology(circle_model(), 1, generators(static_cast<std::size_t>(d)), 4) ==
              homology(cyclic_bar(t, 4)));
    }
}

TEST_CASE("shifted raises degrees and nothing else") {
    auto v = shifted(generators(2, 1, 3), 2);
    REQUIRE(v.generators.size() == 2);
    for (const auto& g : v.generators) {
        CHECK(g.degree == 3);
        CHECK(g.weight == 3);
    }
}

TEST_CASE("splitting S^m x R^{n-m}") {
    CHECK(check_splits(2, 1, generators(1), 4).pass());
    CHECK(check_splits(2, 1, generators(2), 3).pass());
    CHECK(check_splits(3, 1, generators(1), 3).pass());
    CHECK(check_splits(3, 2, generators(1), 3).pass());
    CHECK(check_splits(1, 0, generators(2), 4).pass());
}

TEST_CASE("invalid codimensions") {
    for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 2}, {2, -1}, {1, 3}}) {
        try {
            check_splits(n, m, generators(1), 2);
            FAIL("expected InvalidCodim");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::InvalidCodim);
        }
    }
}

TEST_CASE("bar of free algebras") {
    for (int n = 1; n <= 3; ++n)
        for (int d = 1; d <= 3; ++d) {
            auto r = check_bar_free(n, generators(static_cast<std::size_t>(d)), d == 3 ? 3 : 4);
            CAPTURE(r.summary());
            CHECK(r.pass());
        }
    for (int d = 1; d <= 2; ++d) CHECK(check_bar_sym(generators(static_cast<std::size_t>(d)), 4).pass());
    CHECK(check_bar_sym(generators(1, 1), 4).pass());
}
