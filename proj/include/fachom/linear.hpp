#pragma once

#include "fachom/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace fachom {

/// Sorted by index, no stored zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// y + a*x
SparseVector axpy(const Rational& a, const SparseVector& x, const SparseVector& y);
SparseVector scaled(const Rational& a, const SparseVector& x);

class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    static SparseMatrix identity(std::size_t n);
    static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t nonzeros() const noexcept { return entries_.size(); }
    bool is_zero() const noexcept { return entries_.empty(); }

    /// Accumulates into (r, c); a sum that cancels removes the entry.
    void add(std::size_t r, std::size_t c, const Rational& value);
    void set(std::size_t r, std::size_t c, const Rational& value);
    Rational at(std::size_t r, std::size_t c) const;

    const std::map<std::pair<std::size_t, std::size_t>, Rational>& entries() const noexcept {
        return entries_;
    }

    SparseMatrix transpose() const;
    SparseMatrix operator*(const SparseMatrix& rhs) const;
    SparseVector apply(const SparseVector& v) const;

    std::vector<SparseVector> row_vectors() const;
    std::vector<SparseVector> column_vectors() const;

    bool operator==(const SparseMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::map<std::pair<std::size_t, std::size_t>, Rational> entries_;
};

std::size_t rank(const SparseMatrix& m);

/// Basis of the right kernel; every vector v satisfies m*v = 0.
std::vector<SparseVector> kernel_basis(const SparseMatrix& m);

/// dim ker(d_out) - rank(d_in). Throws CompositionNonzero when d_out*d_in != 0.
std::size_t quotient_dim(const SparseMatrix& d_in, const SparseMatrix& d_out);

/// Incrementally built reduced row echelon basis of a subspace. Pivots are
/// taken at the largest column index of each new vector, so normal forms
/// modulo the span prefer small indices.
class LinearSpan {
public:
    /// Returns false (and stores nothing) when v is already in the span.
    bool insert(const SparseVector& v);

    /// Canonical representative of v modulo the span.
    SparseVector reduce(const SparseVector& v) const;

    /// Coefficients of v on the vectors accepted by insert(), numbered in
    /// acceptance order; nullopt when v is outside the span.
    std::optional<SparseVector> express(const SparseVector& v) const;

    std::size_t dim() const noexcept { return rows_.size(); }
    bool is_pivot(std::size_t column) const { return rows_.count(column) != 0; }
    const std::map<std::size_t, SparseVector>& pivot_rows() const noexcept { return rows_; }

private:
    std::map<std::size_t, SparseVector> rows_;
    std::map<std::size_t, SparseVector> combos_;
    std::size_t accepted_ = 0;
};

}  // namespace fachom
