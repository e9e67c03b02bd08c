// Exact linear algebra over the rationals.
//
// Every quotient, kernel and image in the library goes through these
// routines. Inputs are small (a few hundred columns at most), so elimination
// runs on dense rows internally; SparseMatrix is the exchange format.
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "cdga/rational.hpp"

namespace cdga {

using Vector = std::vector<Scalar>;

/// Sparse coordinate vector keyed by basis index. Zero coefficients are never
/// stored.
using SparseVec = std::map<std::size_t, Scalar>;

void add_scaled(SparseVec& target, const Scalar& factor, const SparseVec& source);
SparseVec scaled(const SparseVec& v, const Scalar& factor);
SparseVec to_sparse(const Vector& v);
Vector to_dense(const SparseVec& v, std::size_t dim);
bool is_zero(const Vector& v);

class SparseMatrix {
 public:
  struct Entry {
    std::size_t row;
    std::size_t col;
    Scalar value;
    bool operator==(const Entry&) const = default;
  };

  SparseMatrix() = default;
  /// Duplicate positions are summed, zeros dropped, entries sorted row-major.
  /// Throws std::out_of_range on an index outside the shape.
  SparseMatrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries);

  static SparseMatrix identity(std::size_t n);
  static SparseMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static SparseMatrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Entry>& entries() const { return entries_; }
  Scalar at(std::size_t row, std::size_t col) const;

  std::vector<Vector> to_rows() const;
  Vector column(std::size_t col) const;
  Vector apply(const Vector& v) const;
  SparseMatrix operator*(const SparseMatrix& other) const;
  SparseMatrix transpose() const;

  bool operator==(const SparseMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Entry> entries_;
};

struct RowEchelon {
  SparseMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Reduced row echelon form by plain rational Gauss-Jordan elimination.
RowEchelon rref(const SparseMatrix& m);

/// Basis of {v : m v = 0}, one vector per free column (free entry set to 1).
std::vector<Vector> kernel_basis(const SparseMatrix& m);

/// Some x with m x = b, or nullopt when b is not in the image of m.
std::optional<Vector> solve(const SparseMatrix& m, const Vector& b);

struct QuotientData {
  /// Standard basis vectors at the non-pivot coordinates of the subspace.
  std::vector<Vector> representatives;
  std::vector<std::size_t> coordinates;
  /// (ambient - dim subspace) x ambient; kills exactly the subspace and is
  /// the identity on the representatives.
  SparseMatrix projection;
};

/// Complement and projection for ambient / span(subspace). Representatives
/// are the lexicographically earliest coordinates not hit by a pivot.
QuotientData quotient_data(const std::vector<Vector>& subspace, std::size_t ambient_dim);

std::size_t rank_of(const std::vector<Vector>& vectors, std::size_t dim);

/// Inverse of a square matrix given by rows; nullopt when singular.
std::optional<std::vector<Vector>> invert(const std::vector<Vector>& rows);

/// Span of sparse vectors kept in reduced row echelon form (pivot = smallest
/// index of each row). Cheap membership tests for ideals and subcomplexes.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(const std::vector<SparseVec>& vectors);

  /// Adds v to the span; false when it was already contained.
  bool insert(const SparseVec& v);
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  std::size_t dim() const { return rows_.size(); }
  /// Echelon basis, ordered by pivot.
  std::vector<SparseVec> basis() const;
  /// Coefficients of v on basis() (nullopt when v is outside the span).
  std::optional<std::vector<Scalar>> coordinates(const SparseVec& v) const;
  bool operator==(const Subspace& other) const { return rows_ == other.rows_; }

 private:
  std::map<std::size_t, SparseVec> rows_;  // pivot -> row with 1 at the pivot
};

namespace detail {
/// In-place Gauss-Jordan on dense rows; returns pivot columns. Rows past the
/// rank end up zero.
std::vector<std::size_t> reduce_rows(std::vector<Vector>& rows, std::size_t cols);
}  // namespace detail

}  // namespace cdga
