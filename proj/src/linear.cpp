#include "fachom/linear.hpp"

#include "fachom/errors.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_map>

namespace fachom {

SparseVector axpy(const Rational& a, const SparseVector& x, const SparseVector& y) {
    SparseVector out;
    out.reserve(x.size() + y.size());
    auto ix = x.begin();
    auto iy = y.begin();
    while (ix != x.end() || iy != y.end()) {
        if (iy == y.end() || (ix != x.end() && ix->first < iy->first)) {
            out.emplace_back(ix->first, a * ix->second);
            ++ix;
        } else if (ix == x.end() || iy->first < ix->first) {
            out.push_back(*iy);
            ++iy;
        } else {
            Rational v = iy->second + a * ix->second;
            if (v != 0) out.emplace_back(ix->first, std::move(v));
            ++ix;
            ++iy;
        }
    }
    return out;
}

SparseVector scaled(const Rational& a, const SparseVector& x) {
    if (a == 0) return {};
    SparseVector out(x);
    for (auto& [i, v] : out) v *= a;
    return out;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Rational>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    SparseMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, rows[r][c]);
    return m;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& value) {
    if (value == 0) return;
    auto [it, inserted] = entries_.try_emplace({r, c}, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) entries_.erase(it);
    }
}

void SparseMatrix::set(std::size_t r, std::size_t c, const Rational& value) {
    if (value == 0)
        entries_.erase({r, c});
    else
        entries_[{r, c}] = value;
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Rational(0) : it->second;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_);
    for (const auto& [rc, v] : entries_) t.entries_.emplace(std::make_pair(rc.second, rc.first), v);
    return t;
}

std::vector<SparseVector> SparseMatrix::row_vectors() const {
    std::vector<SparseVector> rows(rows_);
    for (const auto& [rc, v] : entries_) rows[rc.first].emplace_back(rc.second, v);
    return rows;
}

std::vector<SparseVector> SparseMatrix::column_vectors() const {
    std::vector<SparseVector> cols(cols_);
    for (const auto& [rc, v] : entries_) cols[rc.second].emplace_back(rc.first, v);
    for (auto& c : cols)
        std::sort(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return cols;
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
    std::map<std::size_t, Rational> acc;
    auto cols = column_vectors();
    for (const auto& [j, x] : v)
        for (const auto& [i, a] : cols[j]) acc[i] += a * x;
    SparseVector out;
    for (auto& [i, x] : acc)
        if (x != 0) out.emplace_back(i, x);
    return out;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw Error(ErrorKind::Input, "matrix dimension mismatch in product");
    SparseMatrix out(rows_, rhs.cols_);
    auto lhs_cols = column_vectors();
    for (const auto& [rc, b] : rhs.entries_)
        for (const auto& [i, a] : lhs_cols[rc.first]) out.add(i, rc.second, a * b);
    return out;
}

namespace {

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Sparse elimination with Markowitz pivoting: each step looks at the
// shortest live row and the sparsest live column and pivots on whichever
// candidate entry minimizes (row length - 1) * (column count - 1). Free faces
// (cost 0) are therefore eliminated before anything that causes fill-in.
std::size_t markowitz_rank(std::vector<SparseVector> rows) {
    std::unordered_map<std::size_t, std::size_t> local;
    for (auto& row : rows)
        for (auto& [c, v] : row) {
            auto [it, fresh] = local.emplace(c, local.size());
            c = it->second;
        }
    for (auto& row : rows)
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    const std::size_t ncols = local.size();
    std::vector<std::vector<std::size_t>> col_rows(ncols);  // unsorted, exact membership
    std::vector<std::unordered_map<std::size_t, std::size_t>> where(ncols);
    auto col_insert = [&](std::size_t c, std::size_t r) {
        where[c][r] = col_rows[c].size();
        col_rows[c].push_back(r);
    };
    auto col_erase = [&](std::size_t c, std::size_t r) {
        auto it = where[c].find(r);
        std::size_t pos = it->second;
        std::size_t last = col_rows[c].back();
        col_rows[c][pos] = last;
        where[c][last] = pos;
        col_rows[c].pop_back();
        where[c].erase(r);
    };
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : rows[r]) col_insert(c, r);

    using Item = std::pair<std::size_t, std::size_t>;  // (size, index)
    std::priority_queue<Item, std::vector<Item>, std::greater<>> row_heap, col_heap;
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (!rows[r].empty()) row_heap.emplace(rows[r].size(), r);
    for (std::size_t c = 0; c < ncols; ++c) col_heap.emplace(col_rows[c].size(), c);

    auto entry = [](const SparseVector& row, std::size_t c) -> const Rational& {
        auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::size_t k) { return e.first < k; });
        return it->second;
    };
    // drop stale heap tops; true when a live candidate remains
    auto clean_rows = [&] {
        while (!row_heap.empty()) {
            auto [len, r] = row_heap.top();
            if (len == rows[r].size() && len > 0) return true;
            row_heap.pop();
            if (rows[r].size() > 0 && len != rows[r].size()) row_heap.emplace(rows[r].size(), r);
        }
        return false;
    };
    auto clean_cols = [&] {
        while (!col_heap.empty()) {
            auto [count, c] = col_heap.top();
            if (count == col_rows[c].size() && count > 0) return true;
            col_heap.pop();
            if (col_rows[c].size() > 0 && count != col_rows[c].size()) col_heap.emplace(col_rows[c].size(), c);
        }
        return false;
    };

    std::size_t rank = 0;
    while (clean_rows() && clean_cols()) {
        std::size_t r0 = row_heap.top().second;
        std::size_t c_best = rows[r0].front().first;
        for (const auto& [c, v] : rows[r0])
            if (col_rows[c].size() < col_rows[c_best].size()) c_best = c;
        std::size_t cost_row = (rows[r0].size() - 1) * (col_rows[c_best].size() - 1);

        std::size_t c0 = col_heap.top().second;
        std::size_t r_best = col_rows[c0].front();
        for (auto r : col_rows[c0])
            if (rows[r].size() < rows[r_best].size()) r_best = r;
        std::size_t cost_col = (rows[r_best].size() - 1) * (col_rows[c0].size() - 1);

        std::size_t pivot = r0, c = c_best;
        if (cost_col < cost_row) {
            pivot = r_best;
            c = c0;
        }
        const SparseVector p = rows[pivot];
        const Rational pc = entry(p, c);
        std::vector<std::size_t> others;
        for (auto r : col_rows[c])
            if (r != pivot) others.push_back(r);
        for (auto r : others) {
            SparseVector updated = axpy(-entry(rows[r], c) / pc, p, rows[r]);
            const SparseVector& old = rows[r];
            std::size_t i = 0, j = 0;
            while (i < old.size() || j < updated.size()) {
                if (j == updated.size() || (i < old.size() && old[i].first < updated[j].first)) {
                    col_erase(old[i].first, r);
                    col_heap.emplace(col_rows[old[i].first].size(), old[i].first);
                    ++i;
                } else if (i == old.size() || updated[j].first < old[i].first) {
                    col_insert(updated[j].first, r);
                    ++j;
                } else {
                    ++i;
                    ++j;
                }
            }
            rows[r] = std::move(updated);
            if (!rows[r].empty()) row_heap.emplace(rows[r].size(), r);
        }
        for (const auto& [k, v] : p) {
            col_erase(k, pivot);
            col_heap.emplace(col_rows[k].size(), k);
        }
        rows[pivot].clear();
        ++rank;
    }
    return rank;
}

}  // namespace

std::size_t rank(const SparseMatrix& m) {
    if (m.is_zero()) return 0;
    auto rows = m.row_vectors();
    // Rows touching disjoint column sets never interact during elimination.
    DisjointSets sets(m.cols());
    for (const auto& row : rows)
        for (std::size_t k = 1; k < row.size(); ++k) sets.unite(row[0].first, row[k].first);
    std::map<std::size_t, std::vector<SparseVector>> components;
    for (auto& row : rows)
        if (!row.empty()) components[sets.find(row[0].first)].push_back(std::move(row));
    std::size_t total = 0;
    for (auto& [root, block] : components) total += markowitz_rank(std::move(block));
    return total;
}

std::vector<SparseVector> kernel_basis(const SparseMatrix& m) {
    LinearSpan span;
    for (const auto& row : m.row_vectors())
        if (!row.empty()) span.insert(row);
    std::vector<SparseVector> basis;
    const auto& pivots = span.pivot_rows();
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (span.is_pivot(f)) continue;
        SparseVector v;
        for (const auto& [p, row] : pivots) {
            auto it = std::lower_bound(row.begin(), row.end(), f,
                                       [](const auto& e, std::size_t c) { return e.first < c; });
            if (it != row.end() && it->first == f) v.emplace_back(p, -it->second);
        }
        v.emplace_back(f, Rational(1));
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t quotient_dim(const SparseMatrix& d_in, const SparseMatrix& d_out) {
    if (d_in.rows() != d_out.cols())
        throw Error(ErrorKind::Input, "incompatible differentials: d_in has " +
                                          std::to_string(d_in.rows()) + " rows, d_out has " +
                                          std::to_string(d_out.cols()) + " columns");
    if (!(d_out * d_in).is_zero())
        throw Error(ErrorKind::CompositionNonzero, "d_out * d_in is nonzero");
    std::size_t n = d_out.cols();
    return n - rank(d_out) - rank(d_in);
}

SparseVector LinearSpan::reduce(const SparseVector& v) const {
    SparseVector residual = v;
    for (const auto& [c, x] : v) {
        auto it = rows_.find(c);
        if (it != rows_.end()) residual = axpy(-x, it->second, residual);
    }
    return residual;
}

std::optional<SparseVector> LinearSpan::express(const SparseVector& v) const {
    SparseVector residual = v;
    SparseVector coefficients;
    for (const auto& [c, x] : v) {
        auto it = rows_.find(c);
        if (it == rows_.end()) continue;
        residual = axpy(-x, it->second, residual);
        coefficients = axpy(x, combos_.at(c), coefficients);
    }
    if (!residual.empty()) return std::nullopt;
    return coefficients;
}

bool LinearSpan::insert(const SparseVector& v) {
    SparseVector residual = v;
    SparseVector combo{{accepted_, Rational(1)}};
    for (const auto& [c, x] : v) {
        auto it = rows_.find(c);
        if (it == rows_.end()) continue;
        residual = axpy(-x, it->second, residual);
        combo = axpy(-x, combos_.at(c), combo);
    }
    if (residual.empty()) return false;
    ++accepted_;
    std::size_t pivot = residual.back().first;
    Rational inv = 1 / residual.back().second;
    residual = scaled(inv, residual);
    combo = scaled(inv, combo);
    for (auto& [p, row] : rows_) {
        auto it = std::lower_bound(row.begin(), row.end(), pivot,
                                   [](const auto& e, std::size_t c) { return e.first < c; });
        if (it == row.end() || it->first != pivot) continue;
        Rational factor = -it->second;
        row = axpy(factor, residual, row);
        combos_[p] = axpy(factor, combo, combos_[p]);
    }
    rows_.emplace(pivot, std::move(residual));
    combos_.emplace(pivot, std::move(combo));
    return true;
}

}  // namespace fachom
