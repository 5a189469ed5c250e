#include "fachom/simplicial.hpp"

#include "fachom/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <map>

namespace fachom {

FiniteSimplicialSet::FiniteSimplicialSet(std::string name, std::vector<SimplicialLevel> levels)
    : name_(std::move(name)), levels_(std::move(levels)) {
    for (std::size_t k = 0; k < levels_.size(); ++k) {
        const auto& l = levels_[k];
        std::size_t n = l.simplices.size();
        if (k > 0 && l.faces.size() != k + 1)
            throw Error(ErrorKind::Input, "level " + std::to_string(k) + " needs " + std::to_string(k + 1) + " face maps");
        for (const auto& f : l.faces) {
            if (f.size() != n) throw Error(ErrorKind::Input, "face map on level " + std::to_string(k) + " has wrong length");
            for (auto t : f)
                if (t >= levels_[k - 1].simplices.size())
                    throw Error(ErrorKind::Input, "face map on level " + std::to_string(k) + " out of range");
        }
        if (k + 1 < levels_.size()) {
            if (l.degeneracies.size() != k + 1)
                throw Error(ErrorKind::Input,
                            "level " + std::to_string(k) + " needs " + std::to_string(k + 1) + " degeneracy maps");
            for (const auto& s : l.degeneracies) {
                if (s.size() != n)
                    throw Error(ErrorKind::Input, "degeneracy map on level " + std::to_string(k) + " has wrong length");
                for (auto t : s)
                    if (t >= levels_[k + 1].simplices.size())
                        throw Error(ErrorKind::Input, "degeneracy map on level " + std::to_string(k) + " out of range");
            }
        }
    }
    if (!levels_.empty() && levels_.size() > 63) throw Error(ErrorKind::Input, "too many levels");
}

std::uint64_t FiniteSimplicialSet::degeneracy_set(std::size_t k, std::size_t x) const {
    std::uint64_t mask = 0;
    for (std::size_t j = 0; j < k; ++j)
        if (degeneracy(k - 1, j, face(k, j, x)) == x) mask |= std::uint64_t{1} << j;
    return mask;
}

int FiniteSimplicialSet::max_nondegenerate_dimension() const {
    int best = 0;
    for (std::size_t k = 1; k < levels_.size(); ++k)
        for (std::size_t x = 0; x < size(k); ++x)
            if (degeneracy_set(k, x) == 0) best = static_cast<int>(k);
    return best;
}

nlohmann::json FiniteSimplicialSet::to_json() const {
    nlohmann::json levels = nlohmann::json::array();
    for (const auto& l : levels_)
        levels.push_back({{"simplices", l.simplices}, {"faces", l.faces}, {"degeneracies", l.degeneracies}});
    return {{"levels", levels}};
}

FiniteSimplicialSet FiniteSimplicialSet::from_json(const nlohmann::json& j, std::string name) {
    if (!j.is_object() || !j.contains("levels") || !j["levels"].is_array())
        throw Error(ErrorKind::Input, "simplicial model needs a \"levels\" array");
    std::vector<SimplicialLevel> levels;
    try {
        for (const auto& l : j["levels"]) {
            SimplicialLevel level;
            level.simplices = l.at("simplices").get<std::vector<std::string>>();
            if (l.contains("faces")) level.faces = l["faces"].get<std::vector<std::vector<std::size_t>>>();
            if (l.contains("degeneracies"))
                level.degeneracies = l["degeneracies"].get<std::vector<std::vector<std::size_t>>>();
            levels.push_back(std::move(level));
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Input, std::string("malformed simplicial model: ") + e.what());
    }
    if (!levels.empty() && levels.back().degeneracies.size() > 0) levels.back().degeneracies.clear();
    return FiniteSimplicialSet(std::move(name), std::move(levels));
}

// ---------------------------------------------------------------- built-in models

namespace {

using Key = std::vector<int>;  // monotone sequence; empty = basepoint

struct Combinatorics {
    std::function<std::vector<Key>(std::size_t)> simplices;
    std::function<Key(const Key&, std::size_t)> face;
    std::function<Key(const Key&, std::size_t)> degeneracy;
};

std::string key_label(const Key& k) {
    if (k.empty()) return "*";
    std::string s;
    for (int v : k) s += std::to_string(v);
    return s;
}

std::vector<Key> monotone(std::size_t length, int top) {
    std::vector<Key> out;
    Key cur;
    std::function<void(int)> rec = [&](int lo) {
        if (cur.size() == length) {
            out.push_back(cur);
            return;
        }
        for (int v = lo; v <= top; ++v) {
            cur.push_back(v);
            rec(v);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

bool surjective(const Key& k, int top) { return !k.empty() && k.front() == 0 && k.back() == top && [&] {
    for (std::size_t i = 1; i < k.size(); ++i)
        if (k[i] - k[i - 1] > 1) return false;
    return true;
}(); }

Key delete_entry(const Key& k, std::size_t i) {
    Key out(k);
    out.erase(out.begin() + static_cast<long>(i));
    return out;
}

Key duplicate_entry(const Key& k, std::size_t j) {
    Key out(k);
    out.insert(out.begin() + static_cast<long>(j), k[j]);
    return out;
}

/// Delta^n / boundary: basepoint plus surjections [k] -> [n].
Combinatorics sphere_combinatorics(int n) {
    Combinatorics c;
    c.simplices = [n](std::size_t k) {
        std::vector<Key> out{Key{}};
        for (auto& key : monotone(k + 1, n))
            if (surjective(key, n)) out.push_back(key);
        return out;
    };
    c.face = [n](const Key& k, std::size_t i) {
        if (k.empty()) return Key{};
        Key f = delete_entry(k, i);
        return surjective(f, n) ? f : Key{};
    };
    c.degeneracy = [](const Key& k, std::size_t j) { return k.empty() ? Key{} : duplicate_entry(k, j); };
    return c;
}

Combinatorics interval_combinatorics() {
    Combinatorics c;
    c.simplices = [](std::size_t k) { return monotone(k + 1, 1); };
    c.face = delete_entry;
    c.degeneracy = duplicate_entry;
    return c;
}

Combinatorics point_combinatorics() {
    Combinatorics c;
    c.simplices = [](std::size_t) { return std::vector<Key>{Key{}}; };
    c.face = [](const Key&, std::size_t) { return Key{}; };
    c.degeneracy = [](const Key&, std::size_t) { return Key{}; };
    return c;
}

FiniteSimplicialSet build(const std::string& name, const Combinatorics& c, std::size_t level_count) {
    std::vector<std::vector<Key>> keys;
    std::vector<std::map<Key, std::size_t>> index;
    for (std::size_t k = 0; k < level_count; ++k) {
        keys.push_back(c.simplices(k));
        index.emplace_back();
        for (std::size_t x = 0; x < keys[k].size(); ++x) index[k][keys[k][x]] = x;
    }
    std::vector<SimplicialLevel> levels(level_count);
    for (std::size_t k = 0; k < level_count; ++k) {
        auto& l = levels[k];
        for (const auto& key : keys[k]) l.simplices.push_back(key_label(key));
        if (k > 0)
            for (std::size_t i = 0; i <= k; ++i) {
                l.faces.emplace_back();
                for (const auto& key : keys[k]) l.faces.back().push_back(index[k - 1].at(c.face(key, i)));
            }
        if (k + 1 < level_count)
            for (std::size_t j = 0; j <= k; ++j) {
                l.degeneracies.emplace_back();
                for (const auto& key : keys[k]) l.degeneracies.back().push_back(index[k + 1].at(c.degeneracy(key, j)));
            }
    }
    return FiniteSimplicialSet(name, std::move(levels));
}

}  // namespace

FiniteSimplicialSet builtin_model(const std::string& name, std::size_t level_count) {
    if (level_count == 0) throw Error(ErrorKind::Input, "a model needs at least one level");
    if (name == "point") return build(name, point_combinatorics(), level_count);
    if (name == "circle") return build(name, sphere_combinatorics(1), level_count);
    if (name == "sphere2") return build(name, sphere_combinatorics(2), level_count);
    if (name == "interval") return build(name, interval_combinatorics(), level_count);
    if (name == "torus") {
        auto c = build("circle", sphere_combinatorics(1), level_count);
        auto t = product(c, c);
        return FiniteSimplicialSet("torus", [&] {
            std::vector<SimplicialLevel> levels;
            for (std::size_t k = 0; k < t.level_count(); ++k) levels.push_back(t.level(k));
            return levels;
        }());
    }
    throw Error(ErrorKind::UnknownModel,
                "unknown simplicial model '" + name + "' (expected point, circle, sphere2, torus or interval)");
}

FiniteSimplicialSet product(const FiniteSimplicialSet& x, const FiniteSimplicialSet& y) {
    std::size_t n = std::min(x.level_count(), y.level_count());
    std::vector<SimplicialLevel> levels(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t ny = y.size(k);
        auto& l = levels[k];
        for (std::size_t a = 0; a < x.size(k); ++a)
            for (std::size_t b = 0; b < ny; ++b)
                l.simplices.push_back(tensor_label(x.level(k).simplices[a], y.level(k).simplices[b]));
        if (k > 0)
            for (std::size_t i = 0; i <= k; ++i) {
                l.faces.emplace_back();
                for (std::size_t a = 0; a < x.size(k); ++a)
                    for (std::size_t b = 0; b < ny; ++b)
                        l.faces.back().push_back(x.face(k, i, a) * y.size(k - 1) + y.face(k, i, b));
            }
        if (k + 1 < n)
            for (std::size_t j = 0; j <= k; ++j) {
                l.degeneracies.emplace_back();
                for (std::size_t a = 0; a < x.size(k); ++a)
                    for (std::size_t b = 0; b < ny; ++b)
                        l.degeneracies.back().push_back(x.degeneracy(k, j, a) * y.size(k + 1) +
                                                        y.degeneracy(k, j, b));
            }
    }
    return FiniteSimplicialSet(x.name() + "x" + y.name(), std::move(levels));
}

void check_simplicial_identities(const FiniteSimplicialSet& x) {
    auto fail = [&](const std::string& what, std::size_t k, std::size_t s) {
        throw Error(ErrorKind::Validation, "simplicial identity " + what + " fails on simplex '" +
                                               x.level(k).simplices[s] + "' of level " + std::to_string(k));
    };
    std::size_t n = x.level_count();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t s = 0; s < x.size(k); ++s) {
            // d_i d_j = d_{j-1} d_i for i < j
            if (k >= 2)
                for (std::size_t j = 1; j <= k; ++j)
                    for (std::size_t i = 0; i < j; ++i)
                        if (x.face(k - 1, i, x.face(k, j, s)) != x.face(k - 1, j - 1, x.face(k, i, s)))
                            fail("d_i d_j = d_{j-1} d_i", k, s);
            if (k + 1 >= n) continue;
            for (std::size_t j = 0; j <= k; ++j) {
                std::size_t up = x.degeneracy(k, j, s);
                for (std::size_t i = 0; i <= k + 1; ++i) {
                    std::size_t lhs = x.face(k + 1, i, up);
                    if (i == j || i == j + 1) {
                        if (lhs != s) fail("d_j s_j = d_{j+1} s_j = id", k, s);
                    } else if (i < j) {
                        if (k == 0) continue;
                        if (lhs != x.degeneracy(k - 1, j - 1, x.face(k, i, s))) fail("d_i s_j = s_{j-1} d_i", k, s);
                    } else {
                        if (k == 0) continue;
                        if (lhs != x.degeneracy(k - 1, j, x.face(k, i - 1, s))) fail("d_i s_j = s_j d_{i-1}", k, s);
                    }
                }
                if (k + 2 < n)
                    for (std::size_t i = 0; i <= j; ++i)
                        if (x.degeneracy(k + 1, i, up) != x.degeneracy(k + 1, j + 1, x.degeneracy(k, i, s)))
                            fail("s_i s_j = s_{j+1} s_i", k, s);
            }
        }
}

// ---------------------------------------------------------------- higher Hochschild

namespace {

int min_ideal_weight(const WgAlgebra& a) {
    int best = 0;
    for (auto i : a.augmentation_ideal()) {
        int w = std::abs(a.space()[i].weight);
        if (best == 0 || w < best) best = w;
    }
    return best;
}

using Entry = std::pair<std::size_t, std::size_t>;  // (simplex, algebra basis index)
using Tensor = std::vector<Entry>;                 // sorted by simplex

}  // namespace

int default_level_cap(const FiniteSimplicialSet& x, const WgAlgebra& a, int W) {
    int minw = min_ideal_weight(a);
    if (minw == 0) return 0;
    return (W / minw) * x.max_nondegenerate_dimension();
}

namespace {

/// One factor of a multisimplicial model, with per-level degeneracy masks.
struct Direction {
    const FiniteSimplicialSet* set;
    int cap;
    int maxdim;
    std::vector<std::vector<std::uint64_t>> degsets;  // levels 0..cap+1
};

std::uint64_t full_mask(std::size_t k) { return k == 0 ? std::uint64_t{0} : ((std::uint64_t{1} << k) - 1); }

}  // namespace

ChainComplex space_tensor(const std::vector<FiniteSimplicialSet>& factors, const WgAlgebra& a, int W,
                          const std::vector<int>& level_caps) {
    if (!a.commutative())
        throw Error(ErrorKind::Validation, "space_tensor needs a graded-commutative algebra");
    if (W > a.max_weight())
        throw Error(ErrorKind::Input, "weight window exceeds the algebra truncation");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (i != a.unit() && a.space()[i].weight == 0)
            throw Error(ErrorKind::UnboundedWeight, "augmentation ideal has a weight-0 element");
    if (factors.empty() || factors.size() != level_caps.size())
        throw Error(ErrorKind::Input, "space_tensor needs one level cap per factor");
    const auto& as = a.space();
    const auto ideal = a.augmentation_ideal();
    const int minw = std::max(1, min_ideal_weight(a));
    const std::size_t r = factors.size();

    std::vector<Direction> dirs;
    for (std::size_t j = 0; j < r; ++j) {
        const auto& x = factors[j];
        int cap = level_caps[j];
        if (cap < 0 || static_cast<std::size_t>(cap) + 2 > x.level_count())
            throw Error(ErrorKind::LevelCapTooSmall, "model '" + x.name() + "' has " +
                                                         std::to_string(x.level_count()) + " levels; level cap " +
                                                         std::to_string(cap) + " needs " + std::to_string(cap + 2));
        Direction d{&x, cap, 0, {}};
        d.degsets.resize(static_cast<std::size_t>(cap) + 2);
        for (std::size_t k = 1; k < d.degsets.size(); ++k)
            for (std::size_t s = 0; s < x.size(k); ++s) {
                d.degsets[k].push_back(x.degeneracy_set(k, s));
                d.maxdim = std::max(d.maxdim, static_cast<int>(k) - std::popcount(d.degsets[k][s]));
            }
        dirs.push_back(std::move(d));
    }

    using Level = std::vector<std::size_t>;
    auto level_size = [&](const Level& lv) {
        std::size_t n = 1;
        for (std::size_t j = 0; j < r; ++j) n *= dirs[j].set->size(lv[j]);
        return n;
    };
    // simplex index <-> components, first factor most significant
    auto split = [&](const Level& lv, std::size_t s) {
        std::vector<std::size_t> comp(r);
        for (std::size_t j = r; j-- > 0;) {
            std::size_t n = dirs[j].set->size(lv[j]);
            comp[j] = s % n;
            s /= n;
        }
        return comp;
    };
    auto join = [&](const Level& lv, const std::vector<std::size_t>& comp) {
        std::size_t s = 0;
        for (std::size_t j = 0; j < r; ++j) s = s * dirs[j].set->size(lv[j]) + comp[j];
        return s;
    };
    auto simplex_label = [&](const Level& lv, std::size_t s) {
        auto comp = split(lv, s);
        std::string out;
        for (std::size_t j = 0; j < r; ++j) {
            if (j) out += ",";
            out += dirs[j].set->level(lv[j]).simplices[comp[j]];
        }
        return r == 1 ? out : "(" + out + ")";
    };

    struct LevelData {
        std::vector<std::vector<std::uint64_t>> masks;  // per simplex, per direction
    };
    std::map<Level, LevelData> level_data;
    auto data_for = [&](const Level& lv) -> const LevelData& {
        auto it = level_data.find(lv);
        if (it != level_data.end()) return it->second;
        LevelData d;
        std::size_t n = level_size(lv);
        d.masks.resize(n);
        for (std::size_t s = 0; s < n; ++s) {
            auto comp = split(lv, s);
            for (std::size_t j = 0; j < r; ++j) d.masks[s].push_back(lv[j] == 0 ? 0 : dirs[j].degsets[lv[j]][comp[j]]);
        }
        return level_data.emplace(lv, std::move(d)).first->second;
    };
    auto nondegenerate = [&](const Level& lv, const Tensor& t) {
        const auto& d = data_for(lv);
        for (std::size_t j = 0; j < r; ++j) {
            std::uint64_t m = full_mask(lv[j]);
            for (const auto& [s, e] : t) m &= d.masks[s][j];
            if (m != 0) return false;
        }
        return true;
    };

    auto enumerate = [&](const Level& lv, const std::function<void(const Tensor&, int, int)>& emit) {
        const auto& data = data_for(lv);
        const std::size_t n = level_size(lv);
        int total_level = 0;
        for (auto p : lv) total_level += static_cast<int>(p);
        Tensor cur;
        std::vector<std::uint64_t> open(r);
        for (std::size_t j = 0; j < r; ++j) open[j] = full_mask(lv[j]);
        std::function<void(std::size_t, int, int, int)> rec = [&](std::size_t s, int budget, int weight, int degree) {
            bool closed = true;
            for (std::size_t j = 0; j < r; ++j) {
                int need = std::popcount(open[j]);
                if (need > dirs[j].maxdim * (budget / minw)) return;
                if (need) closed = false;
            }
            if (closed) emit(cur, weight, degree);
            for (std::size_t t = s; t < n; ++t) {
                std::vector<std::uint64_t> saved(open);
                for (std::size_t j = 0; j < r; ++j) open[j] &= data.masks[t][j];
                for (auto i : ideal) {
                    int w = std::abs(as[i].weight);
                    if (w > budget) continue;
                    cur.emplace_back(t, i);
                    rec(t + 1, budget - w, weight + as[i].weight, degree + as[i].degree);
                    cur.pop_back();
                }
                open = std::move(saved);
            }
        };
        rec(0, W, 0, total_level);
    };

    // all levels with every coordinate <= its cap
    std::vector<Level> levels;
    {
        Level lv(r, 0);
        std::function<void(std::size_t)> rec = [&](std::size_t j) {
            if (j == r) {
                levels.push_back(lv);
                return;
            }
            for (int p = 0; p <= dirs[j].cap; ++p) {
                lv[j] = static_cast<std::size_t>(p);
                rec(j + 1);
            }
        };
        rec(0);
        std::stable_sort(levels.begin(), levels.end(), [](const Level& x, const Level& y) {
            std::size_t sx = 0, sy = 0;
            for (auto v : x) sx += v;
            for (auto v : y) sy += v;
            return sx < sy;
        });
    }

    BigradedSpace space;
    std::map<Level, std::map<Tensor, std::size_t>> index;
    std::vector<std::pair<Level, Tensor>> cells;
    for (const auto& lv : levels) {
        auto& idx = index[lv];
        enumerate(lv, [&](const Tensor& t, int w, int d) {
            std::string label = "L";
            for (std::size_t j = 0; j < r; ++j) label += (j ? "," : "") + std::to_string(lv[j]);
            label += "{";
            for (std::size_t p = 0; p < t.size(); ++p) {
                if (p) label += " ";
                label += simplex_label(lv, t[p].first) + ":" + as[t[p].second].label;
            }
            idx[t] = space.add(label + "}", w, d);
            cells.emplace_back(lv, t);
        });
    }
    // the first level past the cap in each direction must be empty in the window
    for (std::size_t j = 0; j < r; ++j)
        for (const auto& lv : levels) {
            if (lv[j] != static_cast<std::size_t>(dirs[j].cap)) continue;
            Level past(lv);
            past[j] += 1;
            std::size_t count = 0;
            enumerate(past, [&](const Tensor&, int, int) { ++count; });
            if (count != 0)
                throw Error(ErrorKind::LevelCapTooSmall, "level " + std::to_string(dirs[j].cap + 1) + " of '" +
                                                             dirs[j].set->name() + "' has " + std::to_string(count) +
                                                             " normalized cells in the window");
        }

    std::vector<LinComb> d(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const auto& [lv, t] = cells[c];
        LinComb& out = d[c];
        int before_levels = 0;
        for (std::size_t j = 0; j < r; ++j) {
            const std::size_t k = lv[j];
            for (std::size_t i = 0; k > 0 && i <= k; ++i) {
                Level down(lv);
                down[j] = k - 1;
                // regroup entries by their face, with the Koszul sign of the shuffle
                std::vector<std::pair<std::size_t, std::size_t>> moved;  // (target simplex, algebra index)
                for (const auto& [s, e] : t) {
                    auto comp = split(lv, s);
                    comp[j] = dirs[j].set->face(k, i, comp[j]);
                    moved.emplace_back(join(down, comp), e);
                }
                int sign = sign_of(static_cast<int>(i) + before_levels);
                for (std::size_t p = 1; p < moved.size(); ++p)
                    for (std::size_t q = p; q > 0 && moved[q - 1].first > moved[q].first; --q) {
                        sign *= koszul(as[moved[q - 1].second].degree, as[moved[q].second].degree);
                        std::swap(moved[q - 1], moved[q]);
                    }
                std::vector<std::pair<std::size_t, LinComb>> groups;
                for (const auto& [target, e] : moved) {
                    if (!groups.empty() && groups.back().first == target)
                        groups.back().second = a.multiply(groups.back().second, LinComb{{e, Rational(1)}});
                    else
                        groups.emplace_back(target, LinComb{{e, Rational(1)}});
                }
                std::vector<std::pair<Tensor, Rational>> terms{{Tensor{}, Rational(sign)}};
                for (const auto& [target, value] : groups) {
                    std::vector<std::pair<Tensor, Rational>> next;
                    for (const auto& [partial, coef] : terms)
                        for (const auto& [e, c2] : value) {
                            Tensor grown(partial);
                            grown.emplace_back(target, e);
                            next.emplace_back(std::move(grown), coef * c2);
                        }
                    terms = std::move(next);
                }
                for (const auto& [tensor_term, coef] : terms) {
                    if (!nondegenerate(down, tensor_term)) continue;
                    add_to(out, index.at(down).at(tensor_term), coef);
                }
            }
            before_levels += static_cast<int>(k);
        }
        // internal differential with sign (-1)^{total level} and Koszul signs along the tensor
        int before = before_levels;
        for (std::size_t p = 0; p < t.size(); ++p) {
            for (const auto& [z, coef] : a.carrier().d(t[p].second)) {
                Tensor u(t);
                u[p].second = z;
                add_to(out, index.at(lv).at(u), coef * sign_of(before));
            }
            before += as[t[p].second].degree;
        }
    }
    ChainComplex result(std::move(space), std::move(d));
    result.check_square_zero();
    return result;
}

ChainComplex space_tensor(const FiniteSimplicialSet& x, const WgAlgebra& a, int W, std::optional<int> level_cap) {
    return space_tensor(std::vector<FiniteSimplicialSet>{x}, a, W,
                        std::vector<int>{level_cap.value_or(default_level_cap(x, a, W))});
}

ChainComplex space_tensor(const std::string& model, const WgAlgebra& a, int W) {
    // product models run as multisimplicial objects, one direction per factor
    std::vector<std::string> names = model == "torus" ? std::vector<std::string>{"circle", "circle"}
                                                      : std::vector<std::string>{model};
    std::vector<FiniteSimplicialSet> factors;
    std::vector<int> caps;
    for (const auto& name : names) {
        int cap = default_level_cap(builtin_model(name, 4), a, W);
        factors.push_back(builtin_model(name, static_cast<std::size_t>(cap) + 2));
        caps.push_back(cap);
    }
    return space_tensor(factors, a, W, caps);
}

}  // namespace fachom

namespace fachom {

BettiTable simplicial_homology(const FiniteSimplicialSet& x) {
    if (x.level_count() < 2) throw Error(ErrorKind::LevelCapTooSmall, "simplicial homology needs two levels");
    const std::size_t top = x.level_count() - 1;
    BigradedSpace space;
    std::vector<std::map<std::size_t, std::size_t>> index(top + 1);
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t k = 0; k <= top; ++k)
        for (std::size_t s = 0; s < x.size(k); ++s) {
            if (k > 0 && x.degeneracy_set(k, s) != 0) continue;
            index[k][s] = space.add(x.level(k).simplices[s], 0, static_cast<int>(k));
            cells.emplace_back(k, s);
        }
    std::vector<LinComb> d(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
        auto [k, s] = cells[c];
        for (std::size_t i = 0; k > 0 && i <= k; ++i) {
            auto it = index[k - 1].find(x.face(k, i, s));
            if (it != index[k - 1].end()) add_to(d[c], it->second, Rational(sign_of(static_cast<int>(i))));
        }
    }
    ChainComplex chains(std::move(space), std::move(d));
    chains.check_square_zero();
    // the top level has no boundaries coming in, so it is left out
    return homology(chains, Window::all(), Window{0, static_cast<int>(top) - 1});
}

}  // namespace fachom
