#include "fachom/algebra.hpp"

#include "fachom/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>

namespace fachom {

namespace {

std::uint64_t pair_key(std::size_t i, std::size_t j) {
    return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint64_t>(j);
}

const LinComb& empty_lincomb() {
    static const LinComb empty;
    return empty;
}

// Basis indices grouped by |weight|, for window-bounded loops.
std::map<int, std::vector<std::size_t>> by_abs_weight(const BigradedSpace& s) {
    std::map<int, std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < s.size(); ++i) out[std::abs(s[i].weight)].push_back(i);
    return out;
}

std::string describe(const BigradedSpace& s, std::initializer_list<std::size_t> idx) {
    std::string out = "(";
    bool first = true;
    for (auto i : idx) {
        if (!first) out += ", ";
        out += "'" + s[i].label + "'";
        first = false;
    }
    return out + ")";
}

}  // namespace

// ---------------------------------------------------------------- WgAlgebra

WgAlgebra::WgAlgebra(ChainComplex carrier, std::size_t unit, bool commutative, int max_weight)
    : carrier_(std::move(carrier)), unit_(unit), commutative_(commutative), max_weight_(max_weight) {
    if (unit_ >= carrier_.size()) throw Error(ErrorKind::Validation, "unit index out of range");
    unit_images_.resize(carrier_.size());
    for (std::size_t i = 0; i < carrier_.size(); ++i) unit_images_[i] = LinComb{{i, Rational(1)}};
}

int WgAlgebra::weight_sign() const {
    for (std::size_t i = 0; i < size(); ++i) {
        int w = space()[i].weight;
        if (w != 0) return w > 0 ? 1 : -1;
    }
    return 0;
}

const LinComb& WgAlgebra::product(std::size_t i, std::size_t j) const {
    if (i == unit_) return unit_images_[j];
    if (j == unit_) return unit_images_[i];
    auto it = products_.find(pair_key(i, j));
    return it == products_.end() ? empty_lincomb() : it->second;
}

void WgAlgebra::set_product(std::size_t i, std::size_t j, LinComb value) {
    if (i == unit_ || j == unit_) return;
    if (value.empty())
        products_.erase(pair_key(i, j));
    else
        products_[pair_key(i, j)] = std::move(value);
}

LinComb WgAlgebra::multiply(const LinComb& x, const LinComb& y) const {
    LinComb out;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) add_to(out, product(i, j), a * b);
    return out;
}

std::vector<std::size_t> WgAlgebra::augmentation_ideal() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
        if (space()[i].weight != 0) out.push_back(i);
    return out;
}

bool is_graded_commutative(const WgAlgebra& a) {
    const auto& s = a.space();
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (std::abs(s[i].weight + s[j].weight) > a.max_weight()) continue;
            LinComb lhs = a.product(i, j);
            LinComb rhs;
            add_to(rhs, a.product(j, i), koszul(s[i].degree, s[j].degree));
            if (lhs != rhs) return false;
        }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (s[i].degree % 2 == 0 || std::abs(2 * s[i].weight) > a.max_weight()) continue;
        if (!a.product(i, i).empty()) return false;
    }
    return true;
}

void validate(const WgAlgebra& a) {
    const auto& s = a.space();
    a.carrier().check_square_zero();
    if (s[a.unit()].weight != 0 || s[a.unit()].degree != 0)
        throw Error(ErrorKind::Validation, "unit is not in slot (0,0)");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (s[i].weight == 0 && i != a.unit())
            throw Error(ErrorKind::Validation,
                        "weight-0 element " + describe(s, {i}) + " outside the span of the unit");
    int sign = a.weight_sign();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (s[i].weight != 0 && (s[i].weight > 0 ? 1 : -1) != sign)
            throw Error(ErrorKind::MixedWeightSigns, "augmentation ideal has weights of both signs");
    if (!a.carrier().d(a.unit()).empty()) throw Error(ErrorKind::Validation, "d(unit) != 0");

    const int W = a.max_weight();
    auto groups = by_abs_weight(s);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (const auto& [j, c] : a.product(i, a.unit()))
            if (j != i || c != 1) throw Error(ErrorKind::Validation, "right unit law fails on " + describe(s, {i}));
        for (const auto& [j, c] : a.product(a.unit(), i))
            if (j != i || c != 1) throw Error(ErrorKind::Validation, "left unit law fails on " + describe(s, {i}));
    }
    for (const auto& [wi, gi] : groups) {
        if (wi == 0) continue;
        for (const auto& [wj, gj] : groups) {
            if (wj == 0 || wi + wj > W) continue;
            for (std::size_t i : gi)
                for (std::size_t j : gj) {
                    const LinComb& ij = a.product(i, j);
                    // Koszul commutativity
                    if (a.commutative()) {
                        LinComb ji;
                        add_to(ji, a.product(j, i), koszul(s[i].degree, s[j].degree));
                        if (ij != ji)
                            throw Error(ErrorKind::Validation, "graded commutativity fails on " + describe(s, {i, j}));
                    }
                    // Leibniz
                    LinComb lhs = a.carrier().apply(ij);
                    LinComb rhs = a.multiply(a.carrier().d(i), LinComb{{j, Rational(1)}});
                    add_to(rhs, a.multiply(LinComb{{i, Rational(1)}}, a.carrier().d(j)), sign_of(s[i].degree));
                    if (lhs != rhs) throw Error(ErrorKind::Validation, "Leibniz rule fails on " + describe(s, {i, j}));
                    // associativity
                    for (const auto& [wk, gk] : groups) {
                        if (wk == 0 || wi + wj + wk > W) continue;
                        for (std::size_t k : gk) {
                            LinComb left = a.multiply(ij, LinComb{{k, Rational(1)}});
                            LinComb right = a.multiply(LinComb{{i, Rational(1)}}, a.product(j, k));
                            if (left != right)
                                throw Error(ErrorKind::Validation, "associativity fails on " + describe(s, {i, j, k}));
                        }
                    }
                }
        }
    }
}

// ---------------------------------------------------------------- constructors

WgAlgebra unit_algebra() {
    BigradedSpace s;
    s.add("1", 0, 0);
    return WgAlgebra(ChainComplex(std::move(s)), 0, true, kAllWeights);
}

namespace {

// Words in the generators with |weight| <= W, in depth-first lexicographic order.
std::vector<std::vector<std::size_t>> enumerate_words(const std::vector<GradedGenerator>& gens, int W) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> word;
    std::function<void(int)> rec = [&](int budget) {
        out.push_back(word);
        for (std::size_t g = 0; g < gens.size(); ++g) {
            int w = std::abs(gens[g].weight);
            if (w > budget) continue;
            word.push_back(g);
            rec(budget - w);
            word.pop_back();
        }
    };
    rec(W);
    return out;
}

std::string word_label(const std::vector<GradedGenerator>& gens, const std::vector<std::size_t>& word) {
    if (word.empty()) return "1";
    std::string out;
    for (auto g : word) {
        if (!out.empty()) out += '*';
        out += gens[g].name;
    }
    return out;
}

Slot word_slot(const std::vector<GradedGenerator>& gens, const std::vector<std::size_t>& word) {
    Slot s;
    for (auto g : word) {
        s.weight += gens[g].weight;
        s.degree += gens[g].degree;
    }
    return s;
}

void check_names(const std::vector<GradedGenerator>& gens) {
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (gens[i].name == gens[j].name)
                throw Error(ErrorKind::Input, "duplicate generator name '" + gens[i].name + "'");
}

std::size_t generator_index(const std::vector<GradedGenerator>& gens, const std::string& name) {
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i].name == name) return i;
    throw Error(ErrorKind::Input, "unknown generator '" + name + "'");
}

}  // namespace

WgAlgebra tensor_algebra(const GradedSpacePresentation& v, int W) {
    check_names(v.generators);
    common_weight_sign(v.generators);
    auto words = enumerate_words(v.generators, W);
    BigradedSpace space;
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (const auto& word : words) {
        Slot s = word_slot(v.generators, word);
        index[word] = space.add(word_label(v.generators, word), s.weight, s.degree);
    }
    std::size_t unit = index.at({});
    WgAlgebra a(ChainComplex(std::move(space)), unit, false, W);
    for (const auto& u : words)
        for (const auto& w : words) {
            if (u.empty() || w.empty()) continue;
            std::vector<std::size_t> uw(u);
            uw.insert(uw.end(), w.begin(), w.end());
            auto it = index.find(uw);
            if (it != index.end()) a.set_product(index[u], index[w], LinComb{{it->second, Rational(1)}});
        }
    a.set_commutative(is_graded_commutative(a));
    return a;
}

WgAlgebra sym_algebra(const GradedSpacePresentation& v, int W) {
    check_names(v.generators);
    const auto& gens = v.generators;
    auto monos = enumerate_monomials(gens, W);
    BigradedSpace space;
    std::map<Monomial, std::size_t> index;
    for (const auto& m : monos)
        index[m] = space.add(monomial_label(gens, m), monomial_weight(gens, m), monomial_degree(gens, m));
    WgAlgebra a(ChainComplex(std::move(space)), index.at({}), true, W);
    for (const auto& m1 : monos)
        for (const auto& m2 : monos) {
            if (m1.empty() || m2.empty()) continue;
            if (std::abs(monomial_weight(gens, m1) + monomial_weight(gens, m2)) > W) continue;
            auto [sign, m] = multiply_monomials(gens, m1, m2);
            if (sign == 0) continue;
            a.set_product(index[m1], index[m2], LinComb{{index.at(m), Rational(sign)}});
        }
    return a;
}

WgAlgebra quotient_algebra(const GradedSpacePresentation& v, int W) {
    check_names(v.generators);
    const auto& gens = v.generators;
    common_weight_sign(gens);
    auto words = enumerate_words(gens, W);
    std::map<Slot, std::vector<std::size_t>> slot_words;  // word ids per slot
    std::map<std::vector<std::size_t>, std::pair<Slot, std::size_t>> where;
    for (std::size_t k = 0; k < words.size(); ++k) {
        Slot s = word_slot(gens, words[k]);
        auto& list = slot_words[s];
        where[words[k]] = {s, list.size()};
        list.push_back(k);
    }

    using Relation = std::vector<std::pair<std::vector<std::size_t>, Rational>>;
    std::vector<Relation> relations;
    for (const auto& rel : v.relations) {
        Relation r;
        std::optional<Slot> slot;
        for (const auto& term : rel) {
            std::vector<std::size_t> word;
            for (const auto& name : term.word) word.push_back(generator_index(gens, name));
            Slot s = word_slot(gens, word);
            if (slot && *slot != s)
                throw Error(ErrorKind::Validation, "relation is not homogeneous in (weight, degree)");
            slot = s;
            if (word.empty()) throw Error(ErrorKind::Validation, "relation has a scalar term");
            r.emplace_back(word, term.coefficient);
        }
        if (!r.empty()) relations.push_back(std::move(r));
    }
    if (v.commutative) {
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = i; j < gens.size(); ++j) {
                Relation r;
                if (i == j) {
                    if (!gens[i].odd()) continue;
                    r.push_back({{i, i}, Rational(1)});
                } else {
                    r.push_back({{i, j}, Rational(1)});
                    r.push_back({{j, i}, Rational(-koszul(gens[i].degree, gens[j].degree))});
                }
                relations.push_back(std::move(r));
            }
    }

    // Ideal: span of u*r*v in every slot of the window.
    std::map<Slot, LinearSpan> ideal;
    for (const auto& r : relations) {
        int wr = std::abs(word_slot(gens, r.front().first).weight);
        for (const auto& u : words) {
            int wu = std::abs(word_slot(gens, u).weight);
            if (wu + wr > W) continue;
            for (const auto& w : words) {
                if (wu + wr + std::abs(word_slot(gens, w).weight) > W) continue;
                std::map<std::size_t, Rational> acc;
                Slot s{};
                for (const auto& [t, c] : r) {
                    std::vector<std::size_t> full(u);
                    full.insert(full.end(), t.begin(), t.end());
                    full.insert(full.end(), w.begin(), w.end());
                    auto [ws, pos] = where.at(full);
                    s = ws;
                    acc[pos] += c;
                }
                SparseVector vec;
                for (auto& [pos, c] : acc)
                    if (c != 0) vec.emplace_back(pos, c);
                if (!vec.empty()) ideal[s].insert(vec);
            }
        }
    }

    BigradedSpace space;
    std::map<Slot, std::map<std::size_t, std::size_t>> normal_index;  // slot position -> algebra index
    for (const auto& [s, list] : slot_words) {
        const LinearSpan* span = ideal.count(s) ? &ideal.at(s) : nullptr;
        for (std::size_t pos = 0; pos < list.size(); ++pos) {
            if (span && span->is_pivot(pos)) continue;
            normal_index[s][pos] = space.add(word_label(gens, words[list[pos]]), s.weight, s.degree);
        }
    }
    std::size_t unit = normal_index.at({0, 0}).at(0);
    std::vector<std::vector<std::size_t>> basis_words(space.size());
    for (const auto& [s, m] : normal_index)
        for (const auto& [pos, idx] : m) basis_words[idx] = words[slot_words[s][pos]];

    WgAlgebra a(ChainComplex(std::move(space)), unit, false, W);
    for (std::size_t i = 0; i < basis_words.size(); ++i)
        for (std::size_t j = 0; j < basis_words.size(); ++j) {
            if (i == unit || j == unit) continue;
            std::vector<std::size_t> uw(basis_words[i]);
            uw.insert(uw.end(), basis_words[j].begin(), basis_words[j].end());
            auto it = where.find(uw);
            if (it == where.end()) continue;
            auto [s, pos] = it->second;
            SparseVector vec{{pos, Rational(1)}};
            if (ideal.count(s)) vec = ideal.at(s).reduce(vec);
            LinComb value;
            for (const auto& [p, c] : vec) add_to(value, normal_index.at(s).at(p), c);
            a.set_product(i, j, std::move(value));
        }
    a.set_commutative(is_graded_commutative(a));
    return a;
}

WgAlgebra algebra_from_presentation(const GradedSpacePresentation& v, int W) {
    if (!v.brackets.empty())
        throw Error(ErrorKind::Input, "presentation carries brackets: it describes a Lie algebra, not an algebra");
    if (!v.relations.empty()) return quotient_algebra(v, W);
    return v.commutative ? sym_algebra(v, W) : tensor_algebra(v, W);
}

WgLieAlgebra lie_from_presentation(const GradedSpacePresentation& v, int W) {
    if (!v.relations.empty())
        throw Error(ErrorKind::Input, "presentation carries relations: it describes an algebra, not a Lie algebra");
    check_names(v.generators);
    common_weight_sign(v.generators);
    BigradedSpace space;
    std::vector<std::optional<std::size_t>> index(v.generators.size());
    for (std::size_t k = 0; k < v.generators.size(); ++k) {
        const auto& g = v.generators[k];
        if (std::abs(g.weight) <= W) index[k] = space.add(g.name, g.weight, g.degree);
    }
    WgLieAlgebra lie(ChainComplex(std::move(space)), W);
    std::map<std::pair<std::size_t, std::size_t>, bool> seen;
    for (const auto& b : v.brackets) {
        std::size_t l = generator_index(v.generators, b.left);
        std::size_t r = generator_index(v.generators, b.right);
        if (seen.count({l, r}) || seen.count({r, l}))
            throw Error(ErrorKind::Input, "bracket [" + b.left + "," + b.right + "] given twice");
        seen[{l, r}] = true;
        Slot target{v.generators[l].weight + v.generators[r].weight,
                    v.generators[l].degree + v.generators[r].degree};
        LinComb value;
        for (const auto& [name, c] : b.value) {
            std::size_t t = generator_index(v.generators, name);
            if (v.generators[t].weight != target.weight || v.generators[t].degree != target.degree)
                throw Error(ErrorKind::Validation, "bracket [" + b.left + "," + b.right + "] is not homogeneous: '" +
                                                       name + "' has the wrong (weight, degree)");
            if (index[t]) add_to(value, *index[t], c);
        }
        if (!index[l] || !index[r]) continue;
        lie.set_antisymmetric(*index[l], *index[r], value);
    }
    return lie;
}

// ---------------------------------------------------------------- enveloping

WgAlgebra enveloping(const WgLieAlgebra& g, int W) {
    const auto& gs = g.space();
    std::vector<GradedGenerator> gens;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (gs[i].degree != 0)
            throw Error(ErrorKind::Validation, "enveloping algebra needs g in degree 0; '" + gs[i].label +
                                                   "' has degree " + std::to_string(gs[i].degree));
        gens.push_back({gs[i].label, gs[i].weight, 0});
    }
    if (!g.carrier().has_zero_differential())
        throw Error(ErrorKind::Validation, "enveloping algebra needs g with zero differential");
    auto monos = enumerate_monomials(gens, W);
    BigradedSpace space;
    std::map<Monomial, std::size_t> index;
    for (const auto& m : monos)
        index[m] = space.add(monomial_label(gens, m), monomial_weight(gens, m), 0);

    // PBW straightening in declaration order: yx -> xy + [y,x].
    std::map<std::vector<std::size_t>, LinComb> memo;
    std::function<LinComb(const std::vector<std::size_t>&)> normal_form =
        [&](const std::vector<std::size_t>& word) -> LinComb {
        if (std::abs(monomial_weight(gens, word)) > W)
            throw Error(ErrorKind::StraighteningOverflow, "straightening left the weight window");
        auto it = memo.find(word);
        if (it != memo.end()) return it->second;
        LinComb out;
        std::size_t k = 0;
        while (k + 1 < word.size() && word[k] <= word[k + 1]) ++k;
        if (k + 1 >= word.size()) {
            out[index.at(word)] = 1;
        } else {
            std::vector<std::size_t> swapped(word);
            std::swap(swapped[k], swapped[k + 1]);
            out = normal_form(swapped);
            for (const auto& [z, c] : g.bracket(word[k], word[k + 1])) {
                std::vector<std::size_t> shorter(word.begin(), word.begin() + k);
                shorter.push_back(z);
                shorter.insert(shorter.end(), word.begin() + k + 2, word.end());
                add_to(out, normal_form(shorter), c);
            }
        }
        memo.emplace(word, out);
        return out;
    };

    WgAlgebra a(ChainComplex(std::move(space)), index.at({}), g.is_abelian(), W);
    for (const auto& m1 : monos)
        for (const auto& m2 : monos) {
            if (m1.empty() || m2.empty()) continue;
            if (std::abs(monomial_weight(gens, m1) + monomial_weight(gens, m2)) > W) continue;
            std::vector<std::size_t> word(m1);
            word.insert(word.end(), m2.begin(), m2.end());
            a.set_product(index[m1], index[m2], normal_form(word));
        }
    return a;
}

BettiTable enveloping_n(const WgLieAlgebra& g, int n, int W) {
    if (n < 1) throw Error(ErrorKind::Input, "enveloping_n needs n >= 1");
    std::vector<GradedGenerator> gens;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& e = g.space()[i];
        gens.push_back({e.label, e.weight, e.degree + 1 - n});
    }
    return sym_dimensions(gens, W);
}

// ---------------------------------------------------------------- opposite / tensor

WgAlgebra opposite(const WgAlgebra& a) {
    WgAlgebra op(a.carrier(), a.unit(), a.commutative(), a.max_weight());
    const auto& s = a.space();
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (i == a.unit() || j == a.unit()) continue;
            const LinComb& ji = a.product(j, i);
            if (ji.empty()) continue;
            LinComb value;
            add_to(value, ji, koszul(s[i].degree, s[j].degree));
            op.set_product(i, j, std::move(value));
        }
    return op;
}

std::pair<WgAlgebra, std::vector<std::pair<std::size_t, std::size_t>>> algebra_tensor_factors(const WgAlgebra& a,
                                                                                              const WgAlgebra& b) {
    int sa = a.weight_sign(), sb = b.weight_sign();
    if (sa != 0 && sb != 0 && sa != sb)
        throw Error(ErrorKind::MixedWeightSigns, "tensor factors have opposite weight signs");
    int W;
    if (sa == 0)
        W = b.max_weight();
    else if (sb == 0)
        W = a.max_weight();
    else
        W = std::min(a.max_weight(), b.max_weight());
    ChainComplex carrier = tensor(a.carrier(), b.carrier(), Window::abs_at_most(W));
    const auto& as = a.space();
    const auto& bs = b.space();
    std::vector<std::pair<std::size_t, std::size_t>> factors;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < as.size(); ++i)
        for (std::size_t j = 0; j < bs.size(); ++j) {
            if (std::abs(as[i].weight + bs[j].weight) > W) continue;
            index[{i, j}] = factors.size();
            factors.emplace_back(i, j);
        }
    std::size_t unit = index.at({a.unit(), b.unit()});
    WgAlgebra t(std::move(carrier), unit, a.commutative() && b.commutative(), W);
    for (std::size_t x = 0; x < factors.size(); ++x)
        for (std::size_t y = 0; y < factors.size(); ++y) {
            if (x == unit || y == unit) continue;
            auto [a1, b1] = factors[x];
            auto [a2, b2] = factors[y];
            if (std::abs(as[a1].weight + bs[b1].weight + as[a2].weight + bs[b2].weight) > W) continue;
            const LinComb& pa = a.product(a1, a2);
            const LinComb& pb = b.product(b1, b2);
            if (pa.empty() || pb.empty()) continue;
            int sign = koszul(bs[b1].degree, as[a2].degree);
            LinComb value;
            for (const auto& [i, ci] : pa)
                for (const auto& [j, cj] : pb) add_to(value, index.at({i, j}), ci * cj * sign);
            t.set_product(x, y, std::move(value));
        }
    return {std::move(t), std::move(factors)};
}

WgAlgebra algebra_tensor(const WgAlgebra& a, const WgAlgebra& b) { return algebra_tensor_factors(a, b).first; }

}  // namespace fachom
