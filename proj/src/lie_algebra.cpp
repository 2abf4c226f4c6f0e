#include "normgeo/lie_algebra.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace normgeo {

BasisIndex BasisIndex::cov(std::size_t i, std::size_t j) {
  if (i < 1 || i > j) throw std::invalid_argument("Cov(i,j) requires 1 <= i <= j");
  return {Kind::Cov, i, j};
}

std::string BasisIndex::label() const {
  if (is_mean()) return "e_" + std::to_string(i);
  return "e_" + std::to_string(i) + std::to_string(j);
}

std::string BasisIndex::name() const {
  if (is_mean()) return "Mean(" + std::to_string(i) + ")";
  return "Cov(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::size_t algebra_dim(std::size_t n) { return n + n * (n + 1) / 2; }

std::vector<BasisIndex> basis_indices(std::size_t n) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  std::vector<BasisIndex> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(BasisIndex::mean(i));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j) out.push_back(BasisIndex::cov(i, j));
  return out;
}

std::vector<BasisElement> basis(std::size_t n) {
  std::vector<BasisElement> out;
  for (const BasisIndex& idx : basis_indices(n)) {
    QMatrix m(n + 1, n + 1);
    if (idx.is_mean())
      m(idx.i - 1, n) = 1;
    else if (idx.i != idx.j)
      m(idx.i - 1, idx.j - 1) = 1;
    else
      m(idx.i - 1, idx.i - 1) = QSqrt2::from_fractions(0, 1, 1, 2);  // 1/sqrt2
    out.push_back({idx, std::move(m)});
  }
  return out;
}

namespace {

// Upper-left n x n block U and top n entries u of the last column.
QMatrix block_u(const QMatrix& x, std::size_t n) {
  QMatrix u(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) u(r, c) = x(r, c);
  return u;
}

QVector block_v(const QMatrix& x, std::size_t n) {
  QVector v(n);
  for (std::size_t r = 0; r < n; ++r) v[r] = x(r, n);
  return v;
}

QSqrt2 trace(const QMatrix& m) {
  QSqrt2 t;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

// u^T S w
QSqrt2 sandwich(const QVector& u, const QMatrix& s, const QVector& w) {
  return dot(u, s * w);
}

}  // namespace

QSqrt2 identity_inner(const QMatrix& x, const QMatrix& y, std::size_t n) {
  QMatrix ux = block_u(x, n), uy = block_u(y, n);
  return dot(block_v(x, n), block_v(y, n)) + trace(ux * uy) + trace(ux * uy.transposed());
}

QSqrt2 identity_cubic(const QMatrix& x, const QMatrix& y, const QMatrix& z, std::size_t n) {
  QMatrix sx = block_u(x, n), sy = block_u(y, n), sz = block_u(z, n);
  sx = sx + sx.transposed();
  sy = sy + sy.transposed();
  sz = sz + sz.transposed();
  QVector vx = block_v(x, n), vy = block_v(y, n), vz = block_v(z, n);
  // C(S,S,S) plus the three placements of one covariance and two mean slots
  return trace(sx * sy * sz) + sandwich(vy, sx, vz) + sandwich(vx, sy, vz) + sandwich(vx, sz, vy);
}

LieAlgebra::LieAlgebra(std::size_t n) : n_(n) {
  for (auto& b : basis(n)) {
    indices_.push_back(b.index);
    matrices_.push_back(std::move(b.matrix));
  }
  const std::size_t d = dim();

  brackets_ = Tensor3(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      QMatrix comm = matrices_[a] * matrices_[b] - matrices_[b] * matrices_[a];
      QVector coords = expand(comm);
      for (std::size_t c = 0; c < d; ++c) brackets_(a, b, c) = coords[c];
    }

  gram_ = QMatrix(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) gram_(a, b) = identity_inner(matrices_[a], matrices_[b], n);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      if (gram_(a, b) != QSqrt2(a == b ? 1 : 0))
        throw std::logic_error("basis is not orthonormal for the Fisher metric");

  cubic_ = SymTensor3(d);
  for (std::size_t s = 0; s < cubic_.size(); ++s) {
    auto [a, b, c] = cubic_.triple(s);
    cubic_.values()[s] = identity_cubic(matrices_[a], matrices_[b], matrices_[c], n);
  }

  // 2<U(x,y),z> = <[z,x],y> + <x,[z,y]>; in an orthonormal basis the
  // z-component is (c^y_{zx} + c^x_{zy}) / 2.
  const QSqrt2 half = QSqrt2::from_fractions(1, 2);
  u_ = Tensor3(d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t z = 0; z < d; ++z) u_(x, y, z) = half * (brackets_(z, x, y) + brackets_(z, y, x));

  levi_civita_.gamma = Tensor3(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c) levi_civita_.gamma(a, b, c) = half * brackets_(a, b, c) + u_(a, b, c);
}

std::size_t LieAlgebra::position(const BasisIndex& idx) const {
  for (std::size_t k = 0; k < indices_.size(); ++k)
    if (indices_[k] == idx) return k;
  throw std::out_of_range("basis index " + idx.name() + " not present for n=" + std::to_string(n_));
}

QVector LieAlgebra::expand(const QMatrix& m) const {
  if (m.rows() != n_ + 1 || m.cols() != n_ + 1) throw std::invalid_argument("expand: wrong matrix size");
  for (std::size_t c = 0; c <= n_; ++c)
    if (!m(n_, c).is_zero()) throw std::logic_error("expand: matrix has a nonzero last row");
  for (std::size_t r = 1; r < n_; ++r)
    for (std::size_t c = 0; c < r; ++c)
      if (!m(r, c).is_zero()) throw std::logic_error("expand: matrix is not upper triangular");
  QVector coords(dim());
  for (std::size_t k = 0; k < dim(); ++k) {
    const BasisIndex& idx = indices_[k];
    if (idx.is_mean())
      coords[k] = m(idx.i - 1, n_);
    else if (idx.i != idx.j)
      coords[k] = m(idx.i - 1, idx.j - 1);
    else
      coords[k] = m(idx.i - 1, idx.i - 1) * QSqrt2::sqrt2();
  }
  return coords;
}

QMatrix LieAlgebra::assemble(std::span<const QSqrt2> coords) const {
  if (coords.size() != dim()) throw std::invalid_argument("assemble: wrong coordinate count");
  QMatrix out(n_ + 1, n_ + 1);
  for (std::size_t k = 0; k < dim(); ++k)
    if (!coords[k].is_zero()) out = out + matrices_[k].scaled(coords[k]);
  return out;
}

QVector LieAlgebra::bracket(std::size_t a, std::size_t b) const {
  QVector out(dim());
  for (std::size_t c = 0; c < dim(); ++c) out[c] = brackets_(a, b, c);
  return out;
}

QVector LieAlgebra::bracket(std::span<const QSqrt2> x, std::span<const QSqrt2> y) const {
  const std::size_t d = dim();
  QVector out(d);
  for (std::size_t a = 0; a < d; ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < d; ++b) {
      if (y[b].is_zero()) continue;
      QSqrt2 w = x[a] * y[b];
      for (std::size_t c = 0; c < d; ++c) addmul(out[c], w, brackets_(a, b, c));
    }
  }
  return out;
}

QVector LieAlgebra::u_map(std::size_t a, std::size_t b) const {
  QVector out(dim());
  for (std::size_t c = 0; c < dim(); ++c) out[c] = u_(a, b, c);
  return out;
}

std::vector<std::size_t> LieAlgebra::derived_series_dims() const {
  const std::size_t d = dim();
  std::vector<QVector> current;
  for (std::size_t k = 0; k < d; ++k) {
    QVector e(d);
    e[k] = 1;
    current.push_back(std::move(e));
  }
  std::vector<std::size_t> dims{d};
  while (!current.empty()) {
    RowEchelon span(d, PivotRule::Leftmost);
    for (std::size_t p = 0; p < current.size(); ++p)
      for (std::size_t q = p + 1; q < current.size(); ++q) span.add_row(bracket(current[p], current[q]));
    std::vector<QVector> next;
    for (const auto& row : span.reduced_rows()) {
      QVector v(d);
      for (const auto& [c, value] : row) v[c] = value;
      next.push_back(std::move(v));
    }
    dims.push_back(next.size());
    if (next.size() == current.size()) break;  // not solvable: the series stalls
    current = std::move(next);
  }
  return dims;
}

const LieAlgebra& lie_algebra(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::unique_ptr<LieAlgebra>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<LieAlgebra>(n);
  return *slot;
}

}  // namespace normgeo
