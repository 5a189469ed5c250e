#include "fachom/monomials.hpp"

#include "fachom/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>

namespace fachom {

int common_weight_sign(const std::vector<GradedGenerator>& gens) {
    int sign = 0;
    for (const auto& g : gens) {
        if (g.weight == 0)
            throw Error(ErrorKind::MixedWeightSigns, "generator '" + g.name + "' has weight 0");
        int s = g.weight > 0 ? 1 : -1;
        if (sign != 0 && s != sign)
            throw Error(ErrorKind::MixedWeightSigns, "generator '" + g.name + "' breaks the common weight sign");
        sign = s;
    }
    return sign;
}

std::vector<Monomial> enumerate_monomials(const std::vector<GradedGenerator>& gens, int max_weight) {
    common_weight_sign(gens);
    std::vector<Monomial> out;
    Monomial current;
    std::function<void(std::size_t, int)> rec = [&](std::size_t g, int budget) {
        if (g == gens.size()) {
            out.push_back(current);
            return;
        }
        int w = std::abs(gens[g].weight);
        int max_power = gens[g].odd() ? 1 : budget / w;
        for (int p = 0; p <= max_power && p * w <= budget; ++p) {
            for (int k = 0; k < p; ++k) current.push_back(g);
            rec(g + 1, budget - p * w);
            for (int k = 0; k < p; ++k) current.pop_back();
        }
    };
    rec(0, max_weight);
    std::stable_sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return std::abs(monomial_weight(gens, a)) < std::abs(monomial_weight(gens, b));
    });
    return out;
}

int monomial_weight(const std::vector<GradedGenerator>& gens, const Monomial& m) {
    int w = 0;
    for (auto g : m) w += gens[g].weight;
    return w;
}

int monomial_degree(const std::vector<GradedGenerator>& gens, const Monomial& m) {
    int d = 0;
    for (auto g : m) d += gens[g].degree;
    return d;
}

std::string monomial_label(const std::vector<GradedGenerator>& gens, const Monomial& m) {
    if (m.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < m.size();) {
        std::size_t j = i;
        while (j < m.size() && m[j] == m[i]) ++j;
        if (!out.empty()) out += '*';
        out += gens[m[i]].name;
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

int normalize_product(const std::vector<GradedGenerator>& gens, std::vector<std::size_t>& seq) {
    int sign = 1;
    // insertion sort; each transposition of two odd generators flips the sign
    for (std::size_t i = 1; i < seq.size(); ++i) {
        for (std::size_t j = i; j > 0 && seq[j - 1] > seq[j]; --j) {
            if (gens[seq[j - 1]].odd() && gens[seq[j]].odd()) sign = -sign;
            std::swap(seq[j - 1], seq[j]);
        }
    }
    for (std::size_t i = 1; i < seq.size(); ++i)
        if (seq[i] == seq[i - 1] && gens[seq[i]].odd()) return 0;
    return sign;
}

std::pair<int, Monomial> multiply_monomials(const std::vector<GradedGenerator>& gens, const Monomial& a,
                                            const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    int sign = 1;
    // count odd generators of a that end up after each odd generator of b
    std::size_t odd_in_a_greater = 0;
    std::size_t ia = 0, ib = 0;
    std::size_t odd_total_a = 0;
    for (auto g : a)
        if (gens[g].odd()) ++odd_total_a;
    std::size_t odd_a_seen = 0;
    while (ia < a.size() || ib < b.size()) {
        if (ib == b.size() || (ia < a.size() && a[ia] <= b[ib])) {
            if (ib < b.size() && a[ia] == b[ib] && gens[a[ia]].odd()) return {0, {}};
            if (gens[a[ia]].odd()) ++odd_a_seen;
            out.push_back(a[ia++]);
        } else {
            if (gens[b[ib]].odd()) {
                odd_in_a_greater = odd_total_a - odd_a_seen;
                if (odd_in_a_greater % 2) sign = -sign;
            }
            out.push_back(b[ib++]);
        }
    }
    return {sign, out};
}

BettiTable sym_dimensions(const std::vector<GradedGenerator>& gens, int max_weight) {
    common_weight_sign(gens);
    // Generating-function product, one generator at a time.
    std::map<Slot, std::size_t> table{{{0, 0}, 1}};
    for (const auto& g : gens) {
        std::map<Slot, std::size_t> next;
        int w = std::abs(g.weight);
        for (const auto& [s, n] : table) {
            int max_power = g.odd() ? 1 : max_weight;
            for (int p = 0; p <= max_power; ++p) {
                Slot t{s.weight + p * g.weight, s.degree + p * g.degree};
                if (std::abs(t.weight) > max_weight) break;
                next[t] += n;
                if (w == 0) break;
            }
        }
        table = std::move(next);
    }
    BettiTable out;
    for (const auto& [s, n] : table) out.set(s, n);
    return out;
}

}  // namespace fachom
