#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "normgeo/qsqrt2.hpp"

namespace normgeo {

using QVector = std::vector<QSqrt2>;
/// (column, value) pairs sorted by column, no explicit zeros.
using SparseRow = std::vector<std::pair<std::size_t, QSqrt2>>;

/// Dense row-major matrix over Q(sqrt2).
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  QMatrix(std::size_t rows, std::size_t cols, std::vector<QSqrt2> data);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  QSqrt2& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const QSqrt2& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const QSqrt2> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  QVector operator*(std::span<const QSqrt2> v) const;
  QMatrix operator*(const QMatrix& rhs) const;
  QMatrix operator-(const QMatrix& rhs) const;
  QMatrix operator+(const QMatrix& rhs) const;
  QMatrix scaled(const QSqrt2& s) const;
  QMatrix transposed() const;
  bool is_zero() const;
  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<QSqrt2> data_;
};

enum class PivotRule {
  /// Nonzero entry with the fewest bits; ties go to the lowest column.
  SmallestBitSize,
  /// Lowest nonzero column (textbook reduced row echelon form).
  Leftmost,
};

/// Incremental reduced row echelon form.
///
/// Rows are fed one at a time; each is reduced against the stored pivot rows
/// and, when something survives, becomes a new pivot row after its pivot
/// column has been cleared from every other stored row. Stored rows therefore
/// stay fully reduced, with a 1 at their pivot.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols, PivotRule rule = PivotRule::SmallestBitSize);

  /// Returns true when the row increased the rank.
  bool add_row(std::span<const QSqrt2> dense);
  bool add_row(const SparseRow& sparse);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  /// Stored rows ordered by pivot column.
  std::vector<SparseRow> reduced_rows() const;
  std::vector<std::size_t> pivot_columns() const;

  /// Basis of {v : row . v = 0 for every added row}, returned in reduced row
  /// echelon form: each vector's first nonzero coordinate is 1 and no other
  /// vector is nonzero there. The result is independent of the pivot rule.
  std::vector<QVector> kernel_basis() const;

 private:
  bool absorb();

  std::size_t cols_;
  PivotRule rule_;
  std::vector<SparseRow> rows_;
  std::vector<std::ptrdiff_t> row_of_pivot_;  // -1 for free columns
  // dense scratch for the row being reduced
  std::vector<QSqrt2> work_;
  std::vector<char> touched_;
  std::vector<std::size_t> touched_list_;
};

std::size_t rank(const QMatrix& m);
/// Exact null space basis of m (empty when m has full column rank).
std::vector<QVector> kernel_basis(const QMatrix& m);

QSqrt2 dot(std::span<const QSqrt2> x, std::span<const QSqrt2> y);
QSqrt2 dot(const SparseRow& row, std::span<const QSqrt2> v);

}  // namespace normgeo
