#pragma once
// Exact sparse linear algebra over Q.
//
// Matrices act on column vectors: an m x n matrix maps Q^n -> Q^m. Rows are
// stored sparsely, each sorted by column with no explicit zeros.

#include <cstddef>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace loghodge::exactlin {

using Rational = mpq_class;

struct Entry {
  std::size_t col;
  Rational value;

  bool operator==(const Entry&) const = default;
};

/// Sorted by column, no zero values, no repeated columns.
using SparseRow = std::vector<Entry>;

/// y += a * x
void axpy(SparseRow& y, const Rational& a, const SparseRow& x);

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t nrows, std::size_t ncols);

  struct Triplet {
    std::size_t row;
    std::size_t col;
    Rational value;
  };
  /// Throws std::invalid_argument on out-of-range or duplicate (row, col) keys.
  /// Zero values are dropped.
  static RatMatrix from_triplets(std::size_t nrows, std::size_t ncols,
                                 std::span<const Triplet> entries);
  static RatMatrix from_dense(const std::vector<std::vector<Rational>>& rows);
  static RatMatrix identity(std::size_t n);

  std::size_t nrows() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }

  const SparseRow& row(std::size_t r) const { return rows_[r]; }
  const std::vector<SparseRow>& rows() const { return rows_; }

  Rational at(std::size_t r, std::size_t c) const;
  /// Overwrites; assigning zero erases the entry.
  void set(std::size_t r, std::size_t c, const Rational& v);
  void add_to(std::size_t r, std::size_t c, const Rational& v);
  /// Replaces a whole row; the row must satisfy the SparseRow invariants.
  void set_row(std::size_t r, SparseRow row);

  RatMatrix transpose() const;

  bool operator==(const RatMatrix&) const = default;

 private:
  std::vector<SparseRow> rows_;
  std::size_t ncols_ = 0;
};

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);

/// Exact rank over Q. Deterministic; pivot order is internal and unobservable.
std::size_t rank(const RatMatrix& m);

/// Rows are relations, columns are generators: ncols - rank.
std::size_t cokernel_dim(const RatMatrix& m);

/// Pivot columns of the reduced row echelon form, scanning columns left to
/// right in the caller's order.
std::vector<std::size_t> pivot_columns(const RatMatrix& m);

/// Basis of {v : m v = 0}, one vector per non-pivot column f with v[f] = 1.
std::vector<SparseRow> kernel_basis(const RatMatrix& m);

/// Incremental row echelon form in a fixed column order. Every stored row has
/// leading coefficient 1 in its pivot column; after interreduce() no stored
/// row has a non-zero entry in another row's pivot column.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t ncols);

  /// Returns true if the row enlarged the row space.
  bool insert(SparseRow row);
  void interreduce();

  /// Full reduction: result has no entries in pivot columns.
  SparseRow reduce(SparseRow row) const;

  std::size_t ncols() const { return ncols_; }
  std::size_t rank() const { return pivots_.size(); }
  bool is_pivot(std::size_t col) const { return row_of_col_[col] >= 0; }
  /// Sorted ascending.
  std::vector<std::size_t> pivots() const;
  /// The stored row whose pivot is `col`; requires is_pivot(col).
  const SparseRow& pivot_row(std::size_t col) const;

 private:
  std::size_t ncols_;
  std::vector<long> row_of_col_;
  std::vector<SparseRow> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace loghodge::exactlin
