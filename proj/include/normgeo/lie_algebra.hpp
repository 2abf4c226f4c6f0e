#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "normgeo/qmatrix.hpp"
#include "normgeo/tensors.hpp"

namespace normgeo {

/// Element of the index set: a mean direction Mean(i) or a covariance
/// direction Cov(i, j) with i <= j. Indices are 1-based.
struct BasisIndex {
  enum class Kind { Mean, Cov };
  Kind kind = Kind::Mean;
  std::size_t i = 1;
  std::size_t j = 0;  // unused for Mean

  static BasisIndex mean(std::size_t i) { return {Kind::Mean, i, 0}; }
  /// Throws std::invalid_argument unless 1 <= i <= j.
  static BasisIndex cov(std::size_t i, std::size_t j);

  bool is_mean() const { return kind == Kind::Mean; }
  bool is_diagonal() const { return kind == Kind::Cov && i == j; }
  /// "e_1", "e_12".
  std::string label() const;
  /// "Mean(1)", "Cov(1,2)".
  std::string name() const;
  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

/// n + n(n+1)/2.
std::size_t algebra_dim(std::size_t n);

/// Canonical order: Mean(1..n), then Cov(i,j) lexicographically.
std::vector<BasisIndex> basis_indices(std::size_t n);

struct BasisElement {
  BasisIndex index;
  /// (n+1) x (n+1) representative in the matrix Lie algebra.
  QMatrix matrix;
};

/// The orthonormal basis e_i, e_ij (i<j), e_ii of the Lie algebra. Throws
/// std::invalid_argument for n = 0.
std::vector<BasisElement> basis(std::size_t n);

/// Lie algebra of the Gaussian manifold for a fixed n, with every table
/// derived from the matrix representatives: structure constants from
/// commutators, inner product and cubic form from the identity-point
/// formulas, then the U-map and the Levi-Civita connection.
///
/// Built once per n and immutable afterwards.
class LieAlgebra {
 public:
  explicit LieAlgebra(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t dim() const { return indices_.size(); }
  const std::vector<BasisIndex>& indices() const { return indices_; }
  const BasisIndex& index(std::size_t k) const { return indices_[k]; }
  std::size_t position(const BasisIndex& idx) const;
  const QMatrix& matrix(std::size_t k) const { return matrices_[k]; }

  /// Coordinates of a matrix of the algebra in the basis. Throws
  /// std::logic_error when the matrix is not in the span.
  QVector expand(const QMatrix& m) const;
  /// Representative of a coordinate vector.
  QMatrix assemble(std::span<const QSqrt2> coords) const;

  /// structure_constants()(a, b, c) = c^c_{ab}, [e_a, e_b] = sum_c c^c_{ab} e_c.
  const Tensor3& structure_constants() const { return brackets_; }
  QVector bracket(std::size_t a, std::size_t b) const;
  QVector bracket(std::span<const QSqrt2> x, std::span<const QSqrt2> y) const;

  /// Gram matrix of the Fisher metric at the identity.
  const QMatrix& gram() const { return gram_; }
  const QSqrt2& inner(std::size_t a, std::size_t b) const { return gram_(a, b); }
  /// Amari-Chentsov cubic form at the identity.
  const SymTensor3& cubic() const { return cubic_; }
  const QSqrt2& cubic(std::size_t a, std::size_t b, std::size_t c) const { return cubic_(a, b, c); }

  /// u_map()(a, b, c) = U(e_a, e_b)^c.
  const Tensor3& u_map() const { return u_; }
  QVector u_map(std::size_t a, std::size_t b) const;

  const ConnCoeffs& levi_civita() const { return levi_civita_; }

  /// Dimensions of the derived series g, [g,g], [[g,g],[g,g]], ... down to
  /// the first repeated or zero dimension.
  std::vector<std::size_t> derived_series_dims() const;

 private:
  std::size_t n_;
  std::vector<BasisIndex> indices_;
  std::vector<QMatrix> matrices_;
  Tensor3 brackets_;
  QMatrix gram_;
  SymTensor3 cubic_;
  Tensor3 u_;
  ConnCoeffs levi_civita_;
};

/// Shared, lazily built algebra for n (thread-safe).
const LieAlgebra& lie_algebra(std::size_t n);

/// Fisher inner product of two algebra elements given as (n+1)x(n+1)
/// representatives: u.v + tr(UV) + tr(UV^T).
QSqrt2 identity_inner(const QMatrix& x, const QMatrix& y, std::size_t n);
/// Amari-Chentsov cubic form of three representatives at the identity.
QSqrt2 identity_cubic(const QMatrix& x, const QMatrix& y, const QMatrix& z, std::size_t n);

}  // namespace normgeo
