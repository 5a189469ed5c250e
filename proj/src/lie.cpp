#include "fachom/lie.hpp"

#include "fachom/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <regex>
#include <set>

namespace fachom {

namespace {

std::uint64_t pair_key(std::size_t i, std::size_t j) {
    return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint64_t>(j);
}

const LinComb& empty_lincomb() {
    static const LinComb empty;
    return empty;
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

LinComb single(std::size_t i) { return LinComb{{i, Rational(1)}}; }

}  // namespace

// ---------------------------------------------------------------- WgLieAlgebra

WgLieAlgebra::WgLieAlgebra(ChainComplex carrier, int max_weight)
    : carrier_(std::move(carrier)), max_weight_(max_weight) {}

int WgLieAlgebra::weight_sign() const {
    for (std::size_t i = 0; i < size(); ++i) {
        int w = space()[i].weight;
        if (w != 0) return w > 0 ? 1 : -1;
    }
    return 0;
}

const LinComb& WgLieAlgebra::bracket(std::size_t i, std::size_t j) const {
    auto it = brackets_.find(pair_key(i, j));
    return it == brackets_.end() ? empty_lincomb() : it->second;
}

void WgLieAlgebra::set_bracket(std::size_t i, std::size_t j, LinComb value) {
    if (value.empty())
        brackets_.erase(pair_key(i, j));
    else
        brackets_[pair_key(i, j)] = std::move(value);
}

void WgLieAlgebra::set_antisymmetric(std::size_t i, std::size_t j, const LinComb& value) {
    set_bracket(i, j, value);
    if (i == j) return;
    LinComb other;
    add_to(other, value, -koszul(space()[i].degree, space()[j].degree));
    set_bracket(j, i, std::move(other));
}

LinComb WgLieAlgebra::bracket(const LinComb& x, const LinComb& y) const {
    LinComb out;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) add_to(out, bracket(i, j), a * b);
    return out;
}

void validate(const WgLieAlgebra& g) {
    const auto& s = g.space();
    g.carrier().check_square_zero();
    std::vector<GradedGenerator> gens;
    for (std::size_t i = 0; i < g.size(); ++i) gens.push_back({s[i].label, s[i].weight, s[i].degree});
    common_weight_sign(gens);
    const int W = g.max_weight();
    auto fits = [&](int w) { return std::abs(w) <= W; };
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (!fits(s[i].weight + s[j].weight)) continue;
            const LinComb& ij = g.bracket(i, j);
            for (const auto& [k, c] : ij)
                if (s[k].weight != s[i].weight + s[j].weight || s[k].degree != s[i].degree + s[j].degree)
                    throw Error(ErrorKind::Validation, "bracket of " + describe(s, {i, j}) + " is not bigraded");
            LinComb ji;
            add_to(ji, g.bracket(j, i), -koszul(s[i].degree, s[j].degree));
            if (ij != ji) throw Error(ErrorKind::Validation, "antisymmetry fails on " + describe(s, {i, j}));
            LinComb lhs = g.carrier().apply(ij);
            LinComb rhs = g.bracket(g.carrier().d(i), single(j));
            add_to(rhs, g.bracket(single(i), g.carrier().d(j)), sign_of(s[i].degree));
            if (lhs != rhs) throw Error(ErrorKind::Validation, "d is not a derivation on " + describe(s, {i, j}));
            if (ij.empty() && g.is_abelian()) continue;
            for (std::size_t k = 0; k < g.size(); ++k) {
                if (!fits(s[i].weight + s[j].weight + s[k].weight)) continue;
                // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
                LinComb left = g.bracket(single(i), g.bracket(j, k));
                LinComb right = g.bracket(ij, single(k));
                add_to(right, g.bracket(single(j), g.bracket(i, k)), koszul(s[i].degree, s[j].degree));
                if (left != right) throw Error(ErrorKind::Validation, "Jacobi fails on " + describe(s, {i, j, k}));
            }
        }
}

// ---------------------------------------------------------------- Chevalley-Eilenberg

namespace {

struct CeData {
    std::vector<GradedGenerator> gens;  // s x for x in the basis of l
    std::vector<Monomial> monomials;
    std::map<Monomial, std::size_t> index;
    std::vector<LinComb> d;
};

CeData ce_data(const WgLieAlgebra& l, int W) {
    CeData ce;
    const auto& s = l.space();
    std::map<std::string, int> seen;
    for (std::size_t i = 0; i < l.size(); ++i) ++seen[s[i].label];
    for (std::size_t i = 0; i < l.size(); ++i) {
        std::string name = s[i].label;
        if (seen[name] > 1) name += "#" + std::to_string(i);
        ce.gens.push_back({name, s[i].weight, s[i].degree + 1});
    }
    ce.monomials = enumerate_monomials(ce.gens, W);
    for (std::size_t k = 0; k < ce.monomials.size(); ++k) ce.index[ce.monomials[k]] = k;
    ce.d.resize(ce.monomials.size());
    const auto& gens = ce.gens;
    for (std::size_t k = 0; k < ce.monomials.size(); ++k) {
        const Monomial& m = ce.monomials[k];
        LinComb& out = ce.d[k];
        // internal differential, shifted: -(-1)^{n_p} s(d x_p)
        int before = 0;
        for (std::size_t p = 0; p < m.size(); ++p) {
            for (const auto& [z, c] : l.carrier().d(m[p])) {
                std::vector<std::size_t> seq(m);
                seq[p] = z;
                int sign = normalize_product(gens, seq);
                if (sign == 0) continue;
                add_to(out, ce.index.at(seq), c * (-sign * sign_of(before)));
            }
            before += gens[m[p]].degree;
        }
        if (l.is_abelian()) continue;
        // bracket part: (-1)^{|sy_p|} eps_pq s[x_p, x_q] * rest
        for (std::size_t p = 0; p < m.size(); ++p)
            for (std::size_t q = p + 1; q < m.size(); ++q) {
                const LinComb& br = l.bracket(m[p], m[q]);
                if (br.empty()) continue;
                int pre_p = 0, pre_q = 0;
                for (std::size_t r = 0; r < q; ++r) {
                    if (r < p) pre_p += gens[m[r]].degree;
                    if (r != p) pre_q += gens[m[r]].degree;
                }
                int dp = gens[m[p]].degree, dq = gens[m[q]].degree;
                int eps = sign_of(dp * pre_p + dq * pre_q) * sign_of(dp);
                std::vector<std::size_t> rest;
                for (std::size_t r = 0; r < m.size(); ++r)
                    if (r != p && r != q) rest.push_back(m[r]);
                for (const auto& [z, c] : br) {
                    std::vector<std::size_t> seq{z};
                    seq.insert(seq.end(), rest.begin(), rest.end());
                    int sign = normalize_product(gens, seq);
                    if (sign == 0) continue;
                    add_to(out, ce.index.at(seq), c * (eps * sign));
                }
            }
    }
    return ce;
}

Rational binomial(int n, int k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

}  // namespace

ChainComplex ce_chains(const WgLieAlgebra& l, int W) {
    CeData ce = ce_data(l, W);
    BigradedSpace space;
    for (const auto& m : ce.monomials)
        space.add(monomial_label(ce.gens, m), monomial_weight(ce.gens, m), monomial_degree(ce.gens, m));
    ChainComplex c(std::move(space), std::move(ce.d));
    c.check_square_zero();
    return c;
}

WgAlgebra ce_cochains(const WgLieAlgebra& g, int W) {
    CeData ce = ce_data(g, W);
    std::vector<GradedGenerator> dual_gens;
    for (const auto& x : ce.gens) dual_gens.push_back({dual_label(x.name), -x.weight, -x.degree});
    BigradedSpace space;
    for (const auto& m : ce.monomials)
        space.add(monomial_label(dual_gens, m), monomial_weight(dual_gens, m), monomial_degree(dual_gens, m));
    // D phi = -(-1)^{|phi|} phi o d
    std::vector<LinComb> d(ce.monomials.size());
    for (std::size_t src = 0; src < ce.monomials.size(); ++src)
        for (const auto& [tgt, c] : ce.d[src]) {
            int phi_degree = -monomial_degree(ce.gens, ce.monomials[tgt]);
            add_to(d[tgt], src, c * -sign_of(phi_degree));
        }
    ChainComplex carrier(std::move(space), std::move(d));
    carrier.check_square_zero();
    WgAlgebra a(std::move(carrier), ce.index.at({}), true, W);
    const auto& gens = ce.gens;
    for (const auto& ma : ce.monomials)
        for (const auto& mb : ce.monomials) {
            if (ma.empty() || mb.empty()) continue;
            if (std::abs(monomial_weight(gens, ma) + monomial_weight(gens, mb)) > W) continue;
            auto [sigma, m] = multiply_monomials(gens, ma, mb);
            if (sigma == 0) continue;
            Rational coefficient = sigma * koszul(monomial_degree(gens, ma), monomial_degree(gens, mb));
            for (std::size_t i = 0; i < m.size();) {
                std::size_t j = i;
                while (j < m.size() && m[j] == m[i]) ++j;
                int in_a = static_cast<int>(std::count(ma.begin(), ma.end(), m[i]));
                coefficient *= binomial(static_cast<int>(j - i), in_a);
                i = j;
            }
            a.set_product(ce.index.at(ma), ce.index.at(mb), LinComb{{ce.index.at(m), coefficient}});
        }
    return a;
}

// ---------------------------------------------------------------- free Lie algebras

namespace {

using Word = std::vector<std::size_t>;
using Polynomial = std::map<Word, Rational>;

bool is_lyndon(const Word& w) {
    for (std::size_t k = 1; k < w.size(); ++k) {
        Word rotation(w.begin() + k, w.end());
        rotation.insert(rotation.end(), w.begin(), w.begin() + k);
        if (!(w < rotation)) return false;
    }
    return !w.empty();
}

Polynomial concat(const Polynomial& a, const Polynomial& b, const Rational& scale) {
    Polynomial out;
    for (const auto& [u, x] : a)
        for (const auto& [v, y] : b) {
            Word uv(u);
            uv.insert(uv.end(), v.begin(), v.end());
            out[uv] += x * y * scale;
        }
    return out;
}

Polynomial commutator(const Polynomial& a, int deg_a, const Polynomial& b, int deg_b) {
    Polynomial out = concat(a, b, 1);
    for (auto& [w, c] : concat(b, a, -koszul(deg_a, deg_b))) out[w] += c;
    std::erase_if(out, [](const auto& e) { return e.second == 0; });
    return out;
}

}  // namespace

WgLieAlgebra free_lie(const GradedSpacePresentation& v, int n, int W) {
    if (n < 1) throw Error(ErrorKind::Input, "free_lie needs n >= 1");
    std::vector<GradedGenerator> gens = v.generators;
    if (common_weight_sign(gens) < 0) throw Error(ErrorKind::MixedWeightSigns, "free_lie needs positive weights");
    for (auto& g : gens) g.degree += n - 1;

    auto word_weight = [&](const Word& w) {
        int s = 0;
        for (auto x : w) s += gens[x].weight;
        return s;
    };
    auto word_degree = [&](const Word& w) {
        int s = 0;
        for (auto x : w) s += gens[x].degree;
        return s;
    };

    // Lyndon words of weight <= W, shortest first.
    std::vector<Word> lyndon;
    std::function<void(Word&, int)> rec = [&](Word& w, int budget) {
        if (is_lyndon(w)) lyndon.push_back(w);
        for (std::size_t g = 0; g < gens.size(); ++g) {
            if (gens[g].weight > budget) continue;
            w.push_back(g);
            rec(w, budget - gens[g].weight);
            w.pop_back();
        }
    };
    Word start;
    rec(start, W);
    std::stable_sort(lyndon.begin(), lyndon.end(), [&](const Word& a, const Word& b) {
        if (word_weight(a) != word_weight(b)) return word_weight(a) < word_weight(b);
        return a.size() < b.size();
    });

    std::map<Word, Polynomial> standard;
    std::function<const Polynomial&(const Word&)> bracketing = [&](const Word& w) -> const Polynomial& {
        auto it = standard.find(w);
        if (it != standard.end()) return it->second;
        Polynomial p;
        if (w.size() == 1) {
            p[w] = 1;
        } else {
            // w = uv with v the longest proper Lyndon suffix
            std::size_t split = 1;
            for (; split < w.size(); ++split)
                if (is_lyndon(Word(w.begin() + split, w.end()))) break;
            Word u(w.begin(), w.begin() + split), rest(w.begin() + split, w.end());
            p = commutator(bracketing(u), word_degree(u), bracketing(rest), word_degree(rest));
        }
        return standard.emplace(w, std::move(p)).first->second;
    };

    struct Candidate {
        std::string label;
        Word content;  // for weight and degree
        Polynomial poly;
    };
    std::vector<Candidate> candidates;
    std::function<std::string(const Word&)> label_of = [&](const Word& w) -> std::string {
        if (w.size() == 1) return gens[w[0]].name;
        std::size_t split = 1;
        for (; split < w.size(); ++split)
            if (is_lyndon(Word(w.begin() + split, w.end()))) break;
        return "[" + label_of(Word(w.begin(), w.begin() + split)) + "," + label_of(Word(w.begin() + split, w.end())) + "]";
    };
    for (const auto& w : lyndon) candidates.push_back({label_of(w), w, bracketing(w)});
    for (const auto& w : lyndon) {
        if (word_degree(w) % 2 == 0 || 2 * word_weight(w) > W) continue;
        const Polynomial& p = bracketing(w);
        Word ww(w);
        ww.insert(ww.end(), w.begin(), w.end());
        std::string l = label_of(w);
        candidates.push_back({"[" + l + "," + l + "]", ww, commutator(p, word_degree(w), p, word_degree(w))});
    }
    std::stable_sort(candidates.begin(), candidates.end(), [&](const Candidate& a, const Candidate& b) {
        return word_weight(a.content) < word_weight(b.content);
    });

    // Coordinates per slot: words of that slot numbered on first use.
    std::map<Slot, std::map<Word, std::size_t>> columns;
    std::map<Slot, LinearSpan> spans;
    std::map<Slot, std::vector<std::size_t>> accepted;  // acceptance order -> basis index
    auto to_vector = [&](Slot s, const Polynomial& p) {
        auto& cols = columns[s];
        SparseVector out;
        for (const auto& [w, c] : p) {
            auto [it, fresh] = cols.emplace(w, cols.size());
            out.emplace_back(it->second, c);
        }
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    };

    BigradedSpace space;
    std::vector<Polynomial> polys;
    std::vector<int> degrees;
    for (const auto& c : candidates) {
        Slot s{word_weight(c.content), word_degree(c.content)};
        if (c.poly.empty()) continue;
        if (!spans[s].insert(to_vector(s, c.poly)))
            throw Error(ErrorKind::Validation, "free Lie basis candidate " + c.label + " is dependent");
        accepted[s].push_back(space.add(c.label, s.weight, s.degree));
        polys.push_back(c.poly);
        degrees.push_back(s.degree);
    }

    WgLieAlgebra lie(ChainComplex(std::move(space)), W);
    const auto& sp = lie.space();
    for (std::size_t i = 0; i < sp.size(); ++i)
        for (std::size_t j = i; j < sp.size(); ++j) {
            Slot s{sp[i].weight + sp[j].weight, sp[i].degree + sp[j].degree};
            if (s.weight > W) continue;
            Polynomial p = commutator(polys[i], degrees[i], polys[j], degrees[j]);
            if (p.empty()) continue;
            auto coords = spans.count(s) ? spans.at(s).express(to_vector(s, p)) : std::nullopt;
            if (!coords)
                throw Error(ErrorKind::Validation, "bracket " + describe(sp, {i, j}) + " leaves the free Lie basis span");
            LinComb value;
            for (const auto& [k, c] : *coords) add_to(value, accepted.at(s)[k], c);
            lie.set_antisymmetric(i, j, value);
        }
    return lie;
}

// ---------------------------------------------------------------- models

const LinComb& CommutativeModel::product(std::size_t i, std::size_t j) const {
    auto it = products.find({i, j});
    return it == products.end() ? empty_lincomb() : it->second;
}

void validate(const CommutativeModel& m) {
    const auto& s = m.space();
    m.carrier.check_square_zero();
    auto mult = [&](const LinComb& x, const LinComb& y) {
        LinComb out;
        for (const auto& [i, a] : x)
            for (const auto& [j, b] : y) add_to(out, m.product(i, j), a * b);
        return out;
    };
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i].weight != 0) throw Error(ErrorKind::Validation, "model element " + describe(s, {i}) + " has weight");
        for (std::size_t j = 0; j < s.size(); ++j) {
            LinComb ji;
            add_to(ji, m.product(j, i), koszul(s[i].degree, s[j].degree));
            if (m.product(i, j) != ji)
                throw Error(ErrorKind::Validation, "model product not commutative on " + describe(s, {i, j}));
            LinComb lhs = m.carrier.apply(m.product(i, j));
            LinComb rhs = mult(m.carrier.d(i), single(j));
            add_to(rhs, mult(single(i), m.carrier.d(j)), sign_of(s[i].degree));
            if (lhs != rhs) throw Error(ErrorKind::Validation, "model Leibniz fails on " + describe(s, {i, j}));
            for (std::size_t k = 0; k < s.size(); ++k)
                if (mult(m.product(i, j), single(k)) != mult(single(i), m.product(j, k)))
                    throw Error(ErrorKind::Validation, "model associativity fails on " + describe(s, {i, j, k}));
        }
    }
}

namespace {

CommutativeModel zero_product_model(std::string name, const std::vector<std::pair<std::string, int>>& basis) {
    BigradedSpace s;
    for (const auto& [label, degree] : basis) s.add(label, 0, degree);
    return {std::move(name), ChainComplex(std::move(s)), {}};
}

}  // namespace

CommutativeModel point_model() {
    CommutativeModel m = zero_product_model("point", {{"1", 0}});
    m.products[{0, 0}] = single(0);
    return m;
}

CommutativeModel euclidean_model(int n) {
    if (n < 0) throw Error(ErrorKind::UnknownModel, "R^n needs n >= 0");
    if (n == 0) return point_model();
    return zero_product_model("R" + std::to_string(n), {{"c", -n}});
}

CommutativeModel circle_model() { return sphere_model(1, 0); }

CommutativeModel sphere_model(int m, int k) {
    if (m < 0 || k < 0) throw Error(ErrorKind::UnknownModel, "sphere model needs m, k >= 0");
    std::string name = "S" + std::to_string(m) + (k > 0 ? "xR" + std::to_string(k) : "");
    if (k >= 1) {
        // H_c(S^m x R^k) = H(S^m) shifted down by k; cup products vanish.
        if (m == 0) return zero_product_model(name, {{"c+", -k}, {"c-", -k}});
        return zero_product_model(name, {{"c", -k}, {"ec", -(m + k)}});
    }
    if (m == 0) {
        CommutativeModel out = zero_product_model(name, {{"p+", 0}, {"p-", 0}});
        out.products[{0, 0}] = single(0);
        out.products[{1, 1}] = single(1);
        return out;
    }
    CommutativeModel out = zero_product_model(name, {{"1", 0}, {"e", -m}});
    out.products[{0, 0}] = single(0);
    out.products[{0, 1}] = single(1);
    out.products[{1, 0}] = single(1);
    return out;
}

CommutativeModel commutative_model(const std::string& name) {
    static const std::regex euclid(R"(R(\d+))"), sphere(R"(S(\d+)(?:xR(\d+))?)");
    std::smatch match;
    if (name == "point") return point_model();
    if (std::regex_match(name, match, euclid)) return euclidean_model(std::stoi(match[1]));
    if (std::regex_match(name, match, sphere))
        return sphere_model(std::stoi(match[1]), match[2].matched ? std::stoi(match[2]) : 0);
    throw Error(ErrorKind::UnknownModel, "unknown model '" + name + "' (expected point, R<n>, S<m> or S<m>xR<k>)");
}

WgLieAlgebra mapping_lie(const CommutativeModel& m, const WgLieAlgebra& g) {
    const auto& ms = m.space();
    const auto& gs = g.space();
    ChainComplex carrier = tensor(m.carrier, g.carrier(), Window::abs_at_most(g.max_weight()));
    // tensor() enumerates pairs with the model index outermost
    std::vector<std::vector<std::size_t>> index(ms.size(), std::vector<std::size_t>(gs.size()));
    std::size_t k = 0;
    for (std::size_t a = 0; a < ms.size(); ++a)
        for (std::size_t x = 0; x < gs.size(); ++x) index[a][x] = k++;
    WgLieAlgebra lie(std::move(carrier), g.max_weight());
    for (std::size_t a = 0; a < ms.size(); ++a)
        for (std::size_t x = 0; x < gs.size(); ++x)
            for (std::size_t b = 0; b < ms.size(); ++b)
                for (std::size_t y = 0; y < gs.size(); ++y) {
                    const LinComb& ab = m.product(a, b);
                    const LinComb& xy = g.bracket(x, y);
                    if (ab.empty() || xy.empty()) continue;
                    int sign = koszul(gs[x].degree, ms[b].degree);
                    LinComb value;
                    for (const auto& [c, u] : ab)
                        for (const auto& [z, v] : xy) add_to(value, index[c][z], u * v * sign);
                    lie.set_bracket(index[a][x], index[b][y], std::move(value));
                }
    return lie;
}

}  // namespace fachom
