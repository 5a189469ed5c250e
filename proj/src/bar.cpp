#include "fachom/bar.hpp"

#include "fachom/errors.hpp"

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

LinComb single(std::size_t i) { return LinComb{{i, Rational(1)}}; }

std::string describe(const BigradedSpace& s, std::size_t i) { return "'" + s[i].label + "'"; }

}  // namespace

WgModule::WgModule(ChainComplex carrier, AlgebraPtr left, AlgebraPtr right, int max_weight)
    : carrier_(std::move(carrier)), left_(std::move(left)), right_(std::move(right)), max_weight_(max_weight) {
    identity_.resize(carrier_.size());
    for (std::size_t i = 0; i < carrier_.size(); ++i) identity_[i] = single(i);
}

const LinComb& WgModule::act_left(std::size_t a, std::size_t m) const {
    if (left_ && a == left_->unit()) return identity_[m];
    auto it = left_action_.find(pair_key(a, m));
    return it == left_action_.end() ? empty_lincomb() : it->second;
}

const LinComb& WgModule::act_right(std::size_t m, std::size_t a) const {
    if (right_ && a == right_->unit()) return identity_[m];
    auto it = right_action_.find(pair_key(m, a));
    return it == right_action_.end() ? empty_lincomb() : it->second;
}

void WgModule::set_left(std::size_t a, std::size_t m, LinComb value) {
    if (value.empty())
        left_action_.erase(pair_key(a, m));
    else
        left_action_[pair_key(a, m)] = std::move(value);
}

void WgModule::set_right(std::size_t m, std::size_t a, LinComb value) {
    if (value.empty())
        right_action_.erase(pair_key(m, a));
    else
        right_action_[pair_key(m, a)] = std::move(value);
}

WgModule regular_module(const AlgebraPtr& a) {
    WgModule m(a->carrier(), a, a, a->max_weight());
    for (std::size_t i = 0; i < a->size(); ++i)
        for (std::size_t j = 0; j < a->size(); ++j) {
            const LinComb& p = a->product(i, j);
            if (p.empty()) continue;
            if (i != a->unit()) m.set_left(i, j, p);
            if (j != a->unit()) m.set_right(i, j, p);
        }
    return m;
}

WgModule trivial_module(const AlgebraPtr& a) {
    BigradedSpace s;
    s.add("1", 0, 0);
    return WgModule(ChainComplex(std::move(s)), a, a, a->max_weight());
}

WgModule restrict_to_unit(const WgModule& m, const AlgebraPtr& unit, Side side) {
    const AlgebraPtr& kept = side == Side::Left ? m.right_algebra() : m.left_algebra();
    WgModule out(m.carrier(), side == Side::Left ? unit : kept, side == Side::Right ? unit : kept, m.max_weight());
    if (!kept) return out;
    for (std::size_t a = 0; a < kept->size(); ++a)
        for (std::size_t x = 0; x < m.size(); ++x) {
            if (side == Side::Left)
                out.set_right(x, a, m.act_right(x, a));
            else
                out.set_left(a, x, m.act_left(a, x));
        }
    return out;
}

WgModule hochschild_module(const AlgebraPtr& a, const AlgebraPtr& ae,
                           const std::vector<std::pair<std::size_t, std::size_t>>& factors, Side side) {
    WgModule out(a->carrier(), side == Side::Left ? ae : nullptr, side == Side::Right ? ae : nullptr,
                 a->max_weight());
    const auto& s = a->space();
    const int W = a->max_weight();
    for (std::size_t k = 0; k < factors.size(); ++k) {
        if (k == ae->unit()) continue;
        auto [x, y] = factors[k];
        for (std::size_t m = 0; m < a->size(); ++m) {
            if (std::abs(s[x].weight + s[y].weight + s[m].weight) > W) continue;
            // (x (x) y) m = (-1)^{|y||m|} x m y
            LinComb left = a->multiply(a->multiply(single(x), single(m)), single(y));
            LinComb scaled_left;
            add_to(scaled_left, left, koszul(s[y].degree, s[m].degree));
            if (side == Side::Left) out.set_left(k, m, std::move(scaled_left));
            // m (x (x) y) = (-1)^{|y|(|m|+|x|)} y m x
            LinComb right = a->multiply(a->multiply(single(y), single(m)), single(x));
            LinComb scaled_right;
            add_to(scaled_right, right, koszul(s[y].degree, s[m].degree + s[x].degree));
            if (side == Side::Right) out.set_right(m, k, std::move(scaled_right));
        }
    }
    return out;
}

void validate(const WgModule& m) {
    const auto& s = m.space();
    m.carrier().check_square_zero();
    const int W = m.max_weight();
    auto act_l = [&](const LinComb& a, const LinComb& x) {
        LinComb out;
        for (const auto& [i, c] : a)
            for (const auto& [j, e] : x) add_to(out, m.act_left(i, j), c * e);
        return out;
    };
    auto act_r = [&](const LinComb& x, const LinComb& a) {
        LinComb out;
        for (const auto& [j, e] : x)
            for (const auto& [i, c] : a) add_to(out, m.act_right(j, i), c * e);
        return out;
    };
    if (const auto& A = m.left_algebra()) {
        const auto& as = A->space();
        for (std::size_t a = 0; a < A->size(); ++a)
            for (std::size_t x = 0; x < m.size(); ++x) {
                if (std::abs(as[a].weight + s[x].weight) > W) continue;
                LinComb lhs = m.carrier().apply(m.act_left(a, x));
                LinComb rhs = act_l(A->carrier().d(a), single(x));
                add_to(rhs, act_l(single(a), m.carrier().d(x)), sign_of(as[a].degree));
                if (lhs != rhs)
                    throw Error(ErrorKind::Validation, "left action Leibniz fails on (" + as[a].label + ", " +
                                                           describe(s, x) + ")");
                for (std::size_t b = 0; b < A->size(); ++b) {
                    if (std::abs(as[a].weight + as[b].weight + s[x].weight) > W) continue;
                    if (act_l(A->product(a, b), single(x)) != act_l(single(a), m.act_left(b, x)))
                        throw Error(ErrorKind::Validation, "left action not associative on (" + as[a].label +
                                                               ", " + as[b].label + ", " + describe(s, x) + ")");
                }
            }
    }
    if (const auto& A = m.right_algebra()) {
        const auto& as = A->space();
        for (std::size_t a = 0; a < A->size(); ++a)
            for (std::size_t x = 0; x < m.size(); ++x) {
                if (std::abs(as[a].weight + s[x].weight) > W) continue;
                LinComb lhs = m.carrier().apply(m.act_right(x, a));
                LinComb rhs = act_r(m.carrier().d(x), single(a));
                add_to(rhs, act_r(single(x), A->carrier().d(a)), sign_of(s[x].degree));
                if (lhs != rhs)
                    throw Error(ErrorKind::Validation, "right action Leibniz fails on (" + describe(s, x) + ", " +
                                                           as[a].label + ")");
                for (std::size_t b = 0; b < A->size(); ++b) {
                    if (std::abs(as[a].weight + as[b].weight + s[x].weight) > W) continue;
                    if (act_r(single(x), A->product(a, b)) != act_r(m.act_right(x, a), single(b)))
                        throw Error(ErrorKind::Validation, "right action not associative on (" + describe(s, x) +
                                                               ", " + as[a].label + ", " + as[b].label + ")");
                }
            }
    }
    if (m.left_algebra() && m.right_algebra()) {
        const auto& L = *m.left_algebra();
        const auto& R = *m.right_algebra();
        for (std::size_t a = 0; a < L.size(); ++a)
            for (std::size_t x = 0; x < m.size(); ++x)
                for (std::size_t b = 0; b < R.size(); ++b) {
                    if (std::abs(L.space()[a].weight + s[x].weight + R.space()[b].weight) > W) continue;
                    if (act_r(m.act_left(a, x), single(b)) != act_l(single(a), m.act_right(x, b)))
                        throw Error(ErrorKind::Validation, "actions do not commute on (" + L.space()[a].label + ", " +
                                                               describe(s, x) + ", " + R.space()[b].label + ")");
                }
    }
}

// ---------------------------------------------------------------- bar complexes

namespace {

/// Basis of a bar-type complex: every cell is a list of indices, the first
/// (and for two-sided bars the last) into end complexes, the rest into Abar.
struct Cells {
    BigradedSpace space;
    std::vector<std::vector<std::size_t>> parts;
    std::map<std::vector<std::size_t>, std::size_t> index;
};

int check_signs(std::initializer_list<const BigradedSpace*> spaces) {
    int sign = 0;
    for (const auto* s : spaces)
        for (std::size_t i = 0; i < s->size(); ++i) {
            int w = (*s)[i].weight;
            if (w == 0) continue;
            int t = w > 0 ? 1 : -1;
            if (sign != 0 && t != sign)
                throw Error(ErrorKind::MixedWeightSigns, "bar construction inputs mix weight signs");
            sign = t;
        }
    return sign;
}

std::vector<std::size_t> checked_ideal(const WgAlgebra& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (i != a.unit() && a.space()[i].weight == 0)
            throw Error(ErrorKind::UnboundedWeight,
                        "augmentation ideal has weight-0 element '" + a.space()[i].label + "'");
    return a.augmentation_ideal();
}

void check_window(const WgAlgebra& a, int W) {
    if (W > a.max_weight())
        throw Error(ErrorKind::Input, "weight window " + std::to_string(W) + " exceeds the algebra truncation " +
                                          std::to_string(a.max_weight()));
}

/// Enumerates first [a_1|...|a_s] last with sum of |weights| <= W.
Cells enumerate_cells(const BigradedSpace& first, const WgAlgebra& a, const BigradedSpace* last, int W) {
    Cells cells;
    auto ideal = checked_ideal(a);
    const auto& as = a.space();
    std::vector<std::size_t> current;
    std::function<void(int, int, int)> rec = [&](int budget, int weight, int degree) {
        auto emit = [&](int w, int d, const std::string& tail) {
            std::size_t level = current.size() - (last ? 2 : 1);
            if (static_cast<int>(level) > std::abs(w) && first[current[0]].weight == 0 &&
                (!last || (*last)[current.back()].weight == 0))
                throw Error(ErrorKind::Validation, "bar level " + std::to_string(level) + " is nonzero in weight " +
                                                       std::to_string(w));
            std::string label = first[current[0]].label + "[";
            std::size_t stop = last ? current.size() - 1 : current.size();
            for (std::size_t k = 1; k < stop; ++k) {
                if (k > 1) label += "|";
                label += as[current[k]].label;
            }
            label += "]" + tail;
            cells.index[current] = cells.space.add(label, w, d);
            cells.parts.push_back(current);
        };
        if (last) {
            for (std::size_t j = 0; j < last->size(); ++j) {
                if (std::abs((*last)[j].weight) > budget) continue;
                current.push_back(j);
                emit(weight + (*last)[j].weight, degree + (*last)[j].degree, (*last)[j].label);
                current.pop_back();
            }
        } else {
            emit(weight, degree, "");
        }
        for (std::size_t i : ideal) {
            int w = std::abs(as[i].weight);
            if (w > budget) continue;
            current.push_back(i);
            rec(budget - w, weight + as[i].weight, degree + as[i].degree + 1);
            current.pop_back();
        }
    };
    for (std::size_t r = 0; r < first.size(); ++r) {
        int w = std::abs(first[r].weight);
        if (w > W) continue;
        current = {r};
        rec(W - w, first[r].weight, first[r].degree);
    }
    return cells;
}

/// Shared middle faces: internal differential on Abar factors and adjacent
/// products a_{i-1} a_i. `mid` are the Abar indices, `e` the running degrees
/// e_0 = |first|, e_i = e_{i-1} + |a_i| + 1. `rebuild` assembles a cell from
/// a modified middle.
template <class Rebuild>
void middle_faces(const WgAlgebra& a, const std::vector<std::size_t>& mid, const std::vector<int>& e,
                  LinComb& out, const Cells& cells, Rebuild rebuild) {
    for (std::size_t i = 0; i < mid.size(); ++i) {
        int sign = sign_of(e[i] + 1);
        for (const auto& [z, c] : a.carrier().d(mid[i])) {
            std::vector<std::size_t> m2(mid);
            m2[i] = z;
            add_to(out, cells.index.at(rebuild(m2)), c * sign);
        }
    }
    for (std::size_t i = 1; i < mid.size(); ++i) {
        int sign = sign_of(e[i]);
        for (const auto& [z, c] : a.product(mid[i - 1], mid[i])) {
            std::vector<std::size_t> m2(mid.begin(), mid.begin() + i - 1);
            m2.push_back(z);
            m2.insert(m2.end(), mid.begin() + i + 1, mid.end());
            add_to(out, cells.index.at(rebuild(m2)), c * sign);
        }
    }
}

struct TwoSided {
    Cells cells;
    std::vector<LinComb> d;
};

TwoSided build_two_sided(const WgModule& r, const AlgebraPtr& ap, const WgModule& l, int W) {
    const WgAlgebra& a = *ap;
    if (r.right_algebra() != ap)
        throw Error(ErrorKind::RoleMismatch, "left piece is not a right module over the gluing algebra");
    if (l.left_algebra() != ap)
        throw Error(ErrorKind::RoleMismatch, "right piece is not a left module over the gluing algebra");
    check_window(a, W);
    if (W > r.max_weight() || W > l.max_weight())
        throw Error(ErrorKind::Input, "weight window exceeds a module truncation");
    check_signs({&r.space(), &a.space(), &l.space()});

    TwoSided out;
    out.cells = enumerate_cells(r.space(), a, &l.space(), W);
    const Cells& cells = out.cells;
    const auto& as = a.space();
    out.d.resize(cells.parts.size());
    for (std::size_t k = 0; k < cells.parts.size(); ++k) {
        const auto& p = cells.parts[k];
        std::size_t x = p.front(), y = p.back();
        std::vector<std::size_t> mid(p.begin() + 1, p.end() - 1);
        std::size_t s = mid.size();
        std::vector<int> e(s + 1);
        e[0] = r.space()[x].degree;
        for (std::size_t i = 0; i < s; ++i) e[i + 1] = e[i] + as[mid[i]].degree + 1;
        auto rebuild_with = [&](std::size_t first, const std::vector<std::size_t>& m2, std::size_t lastv) {
            std::vector<std::size_t> full{first};
            full.insert(full.end(), m2.begin(), m2.end());
            full.push_back(lastv);
            return full;
        };
        LinComb& dk = out.d[k];
        for (const auto& [z, c] : r.carrier().d(x)) add_to(dk, cells.index.at(rebuild_with(z, mid, y)), c);
        middle_faces(a, mid, e, dk, cells, [&](const std::vector<std::size_t>& m2) { return rebuild_with(x, m2, y); });
        for (const auto& [z, c] : l.carrier().d(y))
            add_to(dk, cells.index.at(rebuild_with(x, mid, z)), c * sign_of(e[s]));
        if (s == 0) continue;
        std::vector<std::size_t> tail(mid.begin() + 1, mid.end());
        for (const auto& [z, c] : r.act_right(x, mid.front()))
            add_to(dk, cells.index.at(rebuild_with(z, tail, y)), c * sign_of(e[0]));
        std::vector<std::size_t> head(mid.begin(), mid.end() - 1);
        for (const auto& [z, c] : l.act_left(mid.back(), y))
            add_to(dk, cells.index.at(rebuild_with(x, head, z)), c * -sign_of(e[s - 1]));
    }
    return out;
}

}  // namespace

ChainComplex two_sided_bar(const WgModule& r, const AlgebraPtr& a, const WgModule& l, int W) {
    TwoSided t = build_two_sided(r, a, l, W);
    ChainComplex c(std::move(t.cells.space), std::move(t.d));
    c.check_square_zero();
    return c;
}

WgModule two_sided_bar_module(const WgModule& r, const AlgebraPtr& a, const WgModule& l, int W) {
    TwoSided t = build_two_sided(r, a, l, W);
    Cells cells = std::move(t.cells);
    ChainComplex c(cells.space, std::move(t.d));
    c.check_square_zero();
    WgModule out(std::move(c), r.left_algebra(), l.right_algebra(), W);
    for (std::size_t k = 0; k < cells.parts.size(); ++k) {
        const auto& p = cells.parts[k];
        if (const auto& L = r.left_algebra())
            for (std::size_t b = 0; b < L->size(); ++b) {
                if (b == L->unit()) continue;
                LinComb value;
                for (const auto& [z, coef] : r.act_left(b, p.front())) {
                    std::vector<std::size_t> q(p);
                    q.front() = z;
                    auto it = cells.index.find(q);
                    if (it != cells.index.end()) add_to(value, it->second, coef);
                }
                out.set_left(b, k, std::move(value));
            }
        if (const auto& R = l.right_algebra())
            for (std::size_t b = 0; b < R->size(); ++b) {
                if (b == R->unit()) continue;
                LinComb value;
                for (const auto& [z, coef] : l.act_right(p.back(), b)) {
                    std::vector<std::size_t> q(p);
                    q.back() = z;
                    auto it = cells.index.find(q);
                    if (it != cells.index.end()) add_to(value, it->second, coef);
                }
                out.set_right(k, b, std::move(value));
            }
    }
    return out;
}

ChainComplex bar(const AlgebraPtr& a, int W) {
    WgModule unit = trivial_module(a);
    return two_sided_bar(unit, a, unit, W);
}

ChainComplex cyclic_bar(const WgAlgebra& a, int W) {
    check_window(a, W);
    check_signs({&a.space()});
    Cells cells = enumerate_cells(a.space(), a, nullptr, W);
    const auto& as = a.space();
    std::vector<LinComb> d(cells.parts.size());
    for (std::size_t k = 0; k < cells.parts.size(); ++k) {
        const auto& p = cells.parts[k];
        std::size_t x = p.front();
        std::vector<std::size_t> mid(p.begin() + 1, p.end());
        std::size_t s = mid.size();
        std::vector<int> e(s + 1);
        e[0] = as[x].degree;
        for (std::size_t i = 0; i < s; ++i) e[i + 1] = e[i] + as[mid[i]].degree + 1;
        auto rebuild_with = [&](std::size_t first, const std::vector<std::size_t>& m2) {
            std::vector<std::size_t> full{first};
            full.insert(full.end(), m2.begin(), m2.end());
            return full;
        };
        LinComb& dk = d[k];
        for (const auto& [z, c] : a.carrier().d(x)) add_to(dk, cells.index.at(rebuild_with(z, mid)), c);
        middle_faces(a, mid, e, dk, cells, [&](const std::vector<std::size_t>& m2) { return rebuild_with(x, m2); });
        if (s == 0) continue;
        std::vector<std::size_t> tail(mid.begin() + 1, mid.end());
        for (const auto& [z, c] : a.product(x, mid.front()))
            add_to(dk, cells.index.at(rebuild_with(z, tail)), c * sign_of(e[0]));
        // wrap-around: -(-1)^{(|a_s|+1) e_{s-1}} (a_s a_0)[a_1|...|a_{s-1}]
        std::vector<std::size_t> head(mid.begin(), mid.end() - 1);
        int sign = -sign_of((as[mid.back()].degree + 1) * e[s - 1]);
        for (const auto& [z, c] : a.product(mid.back(), x))
            add_to(dk, cells.index.at(rebuild_with(z, head)), c * sign);
    }
    ChainComplex c(std::move(cells.space), std::move(d));
    c.check_square_zero();
    return c;
}

BettiTable relative_tensor(const WgModule& r, const AlgebraPtr& a, const WgModule& l, int W) {
    return homology(two_sided_bar(r, a, l, W));
}

}  // namespace fachom
