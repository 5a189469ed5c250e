#include "fachom/complexes.hpp"

#include "fachom/errors.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace fachom {

std::string to_string(Slot slot) {
    return "(" + std::to_string(slot.weight) + "," + std::to_string(slot.degree) + ")";
}

void add_to(LinComb& target, std::size_t index, const Rational& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = target.try_emplace(index, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) target.erase(it);
    }
}

void add_to(LinComb& target, const LinComb& source, const Rational& scale) {
    if (scale == 0) return;
    for (const auto& [i, c] : source) add_to(target, i, c * scale);
}

// ---------------------------------------------------------------- space

std::size_t BigradedSpace::add(std::string label, int weight, int degree) {
    Slot s{weight, degree};
    auto& names = labels_[s];
    if (names.count(label))
        throw Error(ErrorKind::Validation, "duplicate basis label '" + label + "' in slot " + to_string(s));
    std::size_t index = elements_.size();
    auto& members = slots_[s];
    names.emplace(label, index);
    position_.push_back(members.size());
    members.push_back(index);
    elements_.push_back({std::move(label), weight, degree});
    return index;
}

const std::vector<std::size_t>& BigradedSpace::slot(Slot s) const {
    static const std::vector<std::size_t> empty;
    auto it = slots_.find(s);
    return it == slots_.end() ? empty : it->second;
}

std::optional<std::size_t> BigradedSpace::find(Slot s, const std::string& label) const {
    auto it = labels_.find(s);
    if (it == labels_.end()) return std::nullopt;
    auto jt = it->second.find(label);
    if (jt == it->second.end()) return std::nullopt;
    return jt->second;
}

BettiTable BigradedSpace::dimensions() const {
    BettiTable t;
    for (const auto& [s, members] : slots_) t.set(s, members.size());
    return t;
}

// ---------------------------------------------------------------- betti

void BettiTable::set(Slot s, std::size_t dim) {
    if (dim == 0)
        entries_.erase(s);
    else
        entries_[s] = dim;
}

void BettiTable::add(Slot s, std::size_t dim) {
    if (dim != 0) entries_[s] += dim;
}

std::size_t BettiTable::at(Slot s) const {
    auto it = entries_.find(s);
    return it == entries_.end() ? 0 : it->second;
}

long long BettiTable::euler_characteristic(int weight) const {
    long long chi = 0;
    for (const auto& [s, n] : entries_)
        if (s.weight == weight) chi += sign_of(s.degree) * static_cast<long long>(n);
    return chi;
}

std::vector<int> BettiTable::weights() const {
    std::set<int> ws;
    for (const auto& [s, n] : entries_) ws.insert(s.weight);
    return {ws.begin(), ws.end()};
}

BettiTable BettiTable::reflected() const {
    BettiTable t;
    for (const auto& [s, n] : entries_) t.set({-s.weight, -s.degree}, n);
    return t;
}

BettiTable BettiTable::restricted(Window weights, Window degrees) const {
    BettiTable t;
    for (const auto& [s, n] : entries_)
        if (weights.contains(s.weight) && degrees.contains(s.degree)) t.set(s, n);
    return t;
}

std::string BettiTable::to_csv() const {
    std::ostringstream out;
    out << "weight,degree,dim\n";
    for (const auto& [s, n] : entries_) out << s.weight << ',' << s.degree << ',' << n << '\n';
    return out.str();
}

std::string BettiTable::to_text() const {
    if (entries_.empty()) return "(empty)\n";
    int dmin = INT_MAX, dmax = INT_MIN;
    for (const auto& [s, n] : entries_) {
        dmin = std::min(dmin, s.degree);
        dmax = std::max(dmax, s.degree);
    }
    std::ostringstream out;
    out << "w\\d";
    for (int d = dmin; d <= dmax; ++d) out << '\t' << d;
    out << '\n';
    for (int w : weights()) {
        out << w;
        for (int d = dmin; d <= dmax; ++d) {
            std::size_t n = at({w, d});
            out << '\t' << (n ? std::to_string(n) : ".");
        }
        out << '\n';
    }
    return out.str();
}

nlohmann::json BettiTable::to_json() const {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [s, n] : entries_)
        entries.push_back({{"weight", s.weight}, {"degree", s.degree}, {"dim", n}});
    return {{"entries", entries}};
}

BettiTable BettiTable::from_json(const nlohmann::json& j) {
    BettiTable t;
    try {
        for (const auto& e : j.at("entries")) {
            long long dim = e.at("dim").get<long long>();
            if (dim < 0) throw Error(ErrorKind::Input, "negative dimension in table");
            t.add({e.at("weight").get<int>(), e.at("degree").get<int>()}, static_cast<std::size_t>(dim));
        }
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorKind::Input, std::string("malformed table JSON: ") + ex.what());
    }
    return t;
}

BettiTable BettiTable::from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "weight,degree,dim")
        throw Error(ErrorKind::Input, "table CSV must start with header 'weight,degree,dim'");
    BettiTable t;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        int w = 0, d = 0;
        long long n = 0;
        char c1 = 0, c2 = 0;
        std::istringstream row(line);
        if (!(row >> w >> c1 >> d >> c2 >> n) || c1 != ',' || c2 != ',' || n < 0)
            throw Error(ErrorKind::Input, "malformed table CSV row '" + line + "'");
        t.add({w, d}, static_cast<std::size_t>(n));
    }
    return t;
}

BettiTable convolve(const BettiTable& a, const BettiTable& b, Window weights) {
    BettiTable t;
    for (const auto& [sa, na] : a.entries())
        for (const auto& [sb, nb] : b.entries()) {
            Slot s{sa.weight + sb.weight, sa.degree + sb.degree};
            if (weights.contains(s.weight)) t.add(s, na * nb);
        }
    return t;
}

// ---------------------------------------------------------------- complex

ChainComplex::ChainComplex(BigradedSpace space)
    : space_(std::move(space)), differential_(space_.size()) {}

ChainComplex::ChainComplex(BigradedSpace space, std::vector<LinComb> differential)
    : space_(std::move(space)), differential_(std::move(differential)) {
    if (differential_.size() != space_.size())
        throw Error(ErrorKind::Validation, "differential has wrong number of images");
    for (std::size_t i = 0; i < differential_.size(); ++i) {
        Slot s = space_.slot_of(i);
        for (const auto& [j, c] : differential_[i]) {
            if (j >= space_.size())
                throw Error(ErrorKind::Validation, "differential image out of range");
            Slot t = space_.slot_of(j);
            if (t.weight != s.weight || t.degree != s.degree - 1)
                throw Error(ErrorKind::Validation, "differential of '" + space_[i].label + "' in slot " +
                                                       to_string(s) + " hits slot " + to_string(t));
        }
    }
}

LinComb ChainComplex::apply(const LinComb& x) const {
    LinComb out;
    for (const auto& [i, c] : x) add_to(out, differential_[i], c);
    return out;
}

bool ChainComplex::has_zero_differential() const {
    return std::all_of(differential_.begin(), differential_.end(),
                       [](const LinComb& l) { return l.empty(); });
}

SparseMatrix ChainComplex::differential_matrix(Slot source) const {
    const auto& src = space_.slot(source);
    const auto& tgt = space_.slot({source.weight, source.degree - 1});
    SparseMatrix m(tgt.size(), src.size());
    for (std::size_t col = 0; col < src.size(); ++col)
        for (const auto& [j, c] : differential_[src[col]]) m.set(space_.position(j), col, c);
    return m;
}

void ChainComplex::check_square_zero(Window weights) const {
    for (const auto& [s, members] : space_.slots()) {
        if (!weights.contains(s.weight)) continue;
        for (std::size_t i : members) {
            LinComb dd = apply(differential_[i]);
            if (!dd.empty())
                throw Error(ErrorKind::DifferentialSquareNonzero,
                            "d^2 != 0 on '" + space_[i].label + "' in slot " + to_string(s));
        }
    }
}

namespace {
std::atomic<unsigned> g_default_jobs{1};

template <typename F>
void parallel_for(std::size_t n, unsigned jobs, F&& body) {
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (unsigned t = 0; t < std::min<std::size_t>(jobs, n); ++t)
        workers.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    for (auto& w : workers) w.join();
    if (failure) std::rethrow_exception(failure);
}
}  // namespace

void set_default_jobs(unsigned jobs) { g_default_jobs = std::max(1u, jobs); }
unsigned default_jobs() { return g_default_jobs; }

BettiTable homology(const ChainComplex& c, Window weights, Window degrees, unsigned jobs) {
    if (jobs == 0) jobs = default_jobs();
    c.check_square_zero(weights);
    const auto& slots = c.space().slots();
    // ranks of d out of every slot that borders a requested slot
    std::vector<Slot> sources;
    for (const auto& [s, members] : slots) {
        if (!weights.contains(s.weight)) continue;
        bool needed = degrees.contains(s.degree) || degrees.contains(s.degree - 1);
        if (needed) sources.push_back(s);
    }
    std::vector<std::size_t> ranks(sources.size());
    parallel_for(sources.size(), jobs,
                 [&](std::size_t k) { ranks[k] = rank(c.differential_matrix(sources[k])); });
    std::map<Slot, std::size_t> rank_out;
    for (std::size_t k = 0; k < sources.size(); ++k) rank_out[sources[k]] = ranks[k];
    auto rank_of = [&](Slot s) {
        auto it = rank_out.find(s);
        return it == rank_out.end() ? std::size_t{0} : it->second;
    };
    BettiTable t;
    for (const auto& [s, members] : slots) {
        if (!weights.contains(s.weight) || !degrees.contains(s.degree)) continue;
        std::size_t r_out = rank_of(s);
        std::size_t r_in = rank_of({s.weight, s.degree + 1});
        t.set(s, members.size() - r_out - r_in);
    }
    return t;
}

ChainComplex unit_complex() {
    BigradedSpace s;
    s.add("1", 0, 0);
    return ChainComplex(std::move(s));
}

std::string tensor_label(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

std::string dual_label(const std::string& label) {
    if (label.size() > 2 && label.ends_with("^v")) return label.substr(0, label.size() - 2);
    return label + "^v";
}

ChainComplex tensor(const ChainComplex& a, const ChainComplex& b, Window weights) {
    BigradedSpace space;
    const auto& sa = a.space();
    const auto& sb = b.space();
    std::vector<std::vector<std::size_t>> index(sa.size(), std::vector<std::size_t>(sb.size(), SIZE_MAX));
    for (std::size_t i = 0; i < sa.size(); ++i)
        for (std::size_t j = 0; j < sb.size(); ++j) {
            int w = sa[i].weight + sb[j].weight;
            if (!weights.contains(w)) continue;
            index[i][j] = space.add(tensor_label(sa[i].label, sb[j].label), w, sa[i].degree + sb[j].degree);
        }
    std::vector<LinComb> d(space.size());
    for (std::size_t i = 0; i < sa.size(); ++i)
        for (std::size_t j = 0; j < sb.size(); ++j) {
            std::size_t k = index[i][j];
            if (k == SIZE_MAX) continue;
            for (const auto& [i2, c] : a.d(i)) add_to(d[k], index[i2][j], c);
            int sign = sign_of(sa[i].degree);
            for (const auto& [j2, c] : b.d(j)) add_to(d[k], index[i][j2], c * sign);
        }
    return ChainComplex(std::move(space), std::move(d));
}

ChainComplex dual(const ChainComplex& c) {
    // dual basis element x^v sits at (-w, -d). Its differential is the
    // transpose twisted by (-1)^(k(k+1)/2), k = deg x; with this twist the
    // double dual reproduces c on the nose.
    const auto& s = c.space();
    BigradedSpace space;
    for (std::size_t i = 0; i < s.size(); ++i) space.add(dual_label(s[i].label), -s[i].weight, -s[i].degree);
    std::vector<LinComb> d(space.size());
    for (std::size_t y = 0; y < s.size(); ++y)
        for (const auto& [x, coef] : c.d(y)) {
            int k = s[x].degree;
            add_to(d[x], y, coef * sign_of(k * (k + 1) / 2));
        }
    return ChainComplex(std::move(space), std::move(d));
}

ChainComplex shift(const ChainComplex& c, int k) {
    const auto& s = c.space();
    BigradedSpace space;
    for (std::size_t i = 0; i < s.size(); ++i) space.add(s[i].label, s[i].weight, s[i].degree + k);
    std::vector<LinComb> d(c.differential());
    if (k % 2 != 0)
        for (auto& image : d)
            for (auto& [j, coef] : image) coef = -coef;
    return ChainComplex(std::move(space), std::move(d));
}

}  // namespace fachom
