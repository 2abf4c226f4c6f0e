#include "normgeo/qmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace normgeo {

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<QSqrt2> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("QMatrix: data size mismatch");
}

QVector QMatrix::operator*(std::span<const QSqrt2> v) const {
  if (v.size() != cols_) throw std::invalid_argument("QMatrix: vector length mismatch");
  QVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = dot(row(r), v);
  return out;
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("QMatrix: shape mismatch in product");
  QMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const QSqrt2& lik = (*this)(i, k);
      if (lik.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) addmul(out(i, j), lik, rhs(k, j));
    }
  return out;
}

QMatrix QMatrix::operator-(const QMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("QMatrix: shape mismatch");
  QMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

QMatrix QMatrix::operator+(const QMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("QMatrix: shape mismatch");
  QMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

QMatrix QMatrix::scaled(const QSqrt2& s) const {
  QMatrix out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

QMatrix QMatrix::transposed() const {
  QMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool QMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const QSqrt2& x) { return x.is_zero(); });
}

QSqrt2 dot(std::span<const QSqrt2> x, std::span<const QSqrt2> y) {
  QSqrt2 acc;
  for (std::size_t i = 0; i < x.size(); ++i) addmul(acc, x[i], y[i]);
  return acc;
}

QSqrt2 dot(const SparseRow& row, std::span<const QSqrt2> v) {
  QSqrt2 acc;
  for (const auto& [c, value] : row) addmul(acc, value, v[c]);
  return acc;
}

// ---------------------------------------------------------------------------

RowEchelon::RowEchelon(std::size_t cols, PivotRule rule)
    : cols_(cols), rule_(rule), row_of_pivot_(cols, -1), work_(cols), touched_(cols, 0) {}

bool RowEchelon::add_row(std::span<const QSqrt2> dense) {
  if (dense.size() != cols_) throw std::invalid_argument("RowEchelon: row length mismatch");
  for (std::size_t c = 0; c < cols_; ++c) {
    if (dense[c].is_zero()) continue;
    work_[c] = dense[c];
    touched_[c] = 1;
    touched_list_.push_back(c);
  }
  return absorb();
}

bool RowEchelon::add_row(const SparseRow& sparse) {
  for (const auto& [c, value] : sparse) {
    if (c >= cols_) throw std::out_of_range("RowEchelon: column index out of range");
    if (value.is_zero()) continue;
    if (!touched_[c]) {
      touched_[c] = 1;
      touched_list_.push_back(c);
    }
    work_[c] += value;
  }
  return absorb();
}

namespace {

const QSqrt2* find_entry(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

// row - factor * pivot_row, both sorted; zeros dropped.
SparseRow subtract_scaled(const SparseRow& row, const QSqrt2& factor, const SparseRow& pivot_row) {
  SparseRow out;
  out.reserve(row.size() + pivot_row.size());
  auto a = row.begin();
  auto b = pivot_row.begin();
  while (a != row.end() || b != pivot_row.end()) {
    if (b == pivot_row.end() || (a != row.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == row.end() || b->first < a->first) {
      out.emplace_back(b->first, -(factor * b->second));
      ++b;
    } else {
      QSqrt2 v = a->second;
      submul(v, factor, b->second);
      if (!v.is_zero()) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  return out;
}

}  // namespace

bool RowEchelon::absorb() {
  // Stored rows are zero in every other pivot column, so one subtraction per
  // pivot column present in the incoming row suffices, in any order.
  std::vector<std::size_t> pivots_hit;
  for (std::size_t c : touched_list_)
    if (row_of_pivot_[c] >= 0 && !work_[c].is_zero()) pivots_hit.push_back(c);
  for (std::size_t c : pivots_hit) {
    const QSqrt2 factor = work_[c];
    for (const auto& [col, value] : rows_[static_cast<std::size_t>(row_of_pivot_[c])]) {
      if (!touched_[col]) {
        touched_[col] = 1;
        touched_list_.push_back(col);
      }
      submul(work_[col], factor, value);
    }
  }

  std::sort(touched_list_.begin(), touched_list_.end());
  std::ptrdiff_t pivot = -1;
  std::size_t best_bits = 0;
  for (std::size_t c : touched_list_) {
    if (work_[c].is_zero()) continue;
    if (rule_ == PivotRule::Leftmost) {
      pivot = static_cast<std::ptrdiff_t>(c);
      break;
    }
    std::size_t b = work_[c].bit_size();
    if (pivot < 0 || b < best_bits) {
      pivot = static_cast<std::ptrdiff_t>(c);
      best_bits = b;
    }
  }

  SparseRow fresh;
  if (pivot >= 0) {
    const QSqrt2 inv = work_[static_cast<std::size_t>(pivot)].inverse();
    for (std::size_t c : touched_list_) {
      if (work_[c].is_zero()) continue;
      if (static_cast<std::ptrdiff_t>(c) == pivot)
        fresh.emplace_back(c, QSqrt2(1));
      else
        fresh.emplace_back(c, work_[c] * inv);
    }
  }
  for (std::size_t c : touched_list_) {
    work_[c] = QSqrt2();
    touched_[c] = 0;
  }
  touched_list_.clear();
  if (pivot < 0) return false;

  const auto pc = static_cast<std::size_t>(pivot);
  for (auto& stored : rows_) {
    if (const QSqrt2* g = find_entry(stored, pc)) {
      const QSqrt2 factor = *g;
      stored = subtract_scaled(stored, factor, fresh);
    }
  }
  row_of_pivot_[pc] = static_cast<std::ptrdiff_t>(rows_.size());
  rows_.push_back(std::move(fresh));
  return true;
}

std::vector<std::size_t> RowEchelon::pivot_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < cols_; ++c)
    if (row_of_pivot_[c] >= 0) out.push_back(c);
  return out;
}

std::vector<SparseRow> RowEchelon::reduced_rows() const {
  std::vector<SparseRow> out;
  for (std::size_t c : pivot_columns()) out.push_back(rows_[static_cast<std::size_t>(row_of_pivot_[c])]);
  return out;
}

std::vector<QVector> RowEchelon::kernel_basis() const {
  std::vector<std::ptrdiff_t> slot(cols_, -1);
  std::vector<QVector> raw;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (row_of_pivot_[c] >= 0) continue;
    slot[c] = static_cast<std::ptrdiff_t>(raw.size());
    raw.emplace_back(cols_);
    raw.back()[c] = 1;
  }
  for (std::size_t pc = 0; pc < cols_; ++pc) {
    if (row_of_pivot_[pc] < 0) continue;
    for (const auto& [col, value] : rows_[static_cast<std::size_t>(row_of_pivot_[pc])])
      if (slot[col] >= 0) raw[static_cast<std::size_t>(slot[col])][pc] = -value;
  }

  RowEchelon canon(cols_, PivotRule::Leftmost);
  for (const auto& v : raw) canon.add_row(v);
  std::vector<QVector> out;
  for (const auto& r : canon.reduced_rows()) {
    QVector v(cols_);
    for (const auto& [col, value] : r) v[col] = value;
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const QMatrix& m) {
  RowEchelon e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.add_row(m.row(r));
  return e.rank();
}

std::vector<QVector> kernel_basis(const QMatrix& m) {
  RowEchelon e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.add_row(m.row(r));
  return e.kernel_basis();
}

}  // namespace normgeo
