#pragma once

#include <cstddef>

#include "normgeo/gaussian.hpp"

namespace normgeo {

/// (A, b) with A upper-triangular, positive diagonal; realized as the
/// block matrix (A b; 0 1).
class GroupElement {
 public:
  /// Throws std::invalid_argument unless A is upper-triangular (exact zeros
  /// below the diagonal) with a strictly positive diagonal.
  static GroupElement make(const Matrix& a, const Vector& b);
  static GroupElement identity(std::size_t n);

  std::size_t n() const { return static_cast<std::size_t>(b_.size()); }
  const Matrix& a() const { return a_; }
  const Vector& b() const { return b_; }
  /// (n+1) x (n+1) block matrix.
  Matrix matrix() const;

 private:
  GroupElement() = default;
  Matrix a_;
  Vector b_;
};

/// (A, b)(A', b') = (A A', A b' + b).
GroupElement group_mul(const GroupElement& g, const GroupElement& h);
/// (A^-1, -A^-1 b).
GroupElement group_inv(const GroupElement& g);

/// (A Sigma A^T, A mu + b).
ManifoldPoint act(const GroupElement& g, const ManifoldPoint& p);
/// (A X A^T, A v).
TangentVector act_tangent(const GroupElement& g, const TangentVector& t);

/// (A A^T, b).
ManifoldPoint phi(const GroupElement& g);
/// Upper Cholesky factor of Sigma together with mu.
GroupElement phi_inv(const ManifoldPoint& p);

/// Coefficients of t over the orthonormal algebra basis (canonical order):
/// move t to the identity with phi_inv(p)^-1, invert d(phi) there, expand.
Vector pull_back_to_identity(const ManifoldPoint& p, const TangentVector& t);

/// Inverse of pull_back_to_identity: the tangent at p whose coefficients are c.
TangentVector push_forward_from_identity(const ManifoldPoint& p, const Vector& coeffs);

}  // namespace normgeo
