#pragma once

#include <cstddef>

#include "normgeo/linalg.hpp"

namespace normgeo {

/// (Sigma, mu) with Sigma symmetric positive definite. The upper Cholesky
/// factor and the inverse are cached at construction.
class ManifoldPoint {
 public:
  /// Validates shapes, finiteness, symmetry (see kSymmetryTolerance) and
  /// positive definiteness. Throws std::invalid_argument or NotPositiveDefinite.
  static ManifoldPoint make(const Matrix& sigma, const Vector& mu);
  static ManifoldPoint standard(std::size_t n);

  std::size_t n() const { return static_cast<std::size_t>(mu_.size()); }
  const Matrix& sigma() const { return sigma_; }
  const Vector& mu() const { return mu_; }
  /// A with Sigma = A A^T, A upper-triangular, positive diagonal.
  const Matrix& chol() const { return chol_; }
  const Matrix& sigma_inv() const { return sigma_inv_; }
  double log_det_sigma() const { return log_det_; }

 private:
  ManifoldPoint() = default;
  Matrix sigma_;
  Vector mu_;
  Matrix chol_;
  Matrix sigma_inv_;
  double log_det_ = 0;
};

/// (X, v): X symmetric is the Sigma-direction, v the mu-direction.
class TangentVector {
 public:
  static TangentVector make(const Matrix& x, const Vector& v);
  static TangentVector zero(std::size_t n);
  /// Pure mean direction e_i (0-based i).
  static TangentVector mean_direction(std::size_t n, std::size_t i);
  /// Pure covariance direction E_ij + E_ji (E_ii when i == j), 0-based.
  static TangentVector cov_direction(std::size_t n, std::size_t i, std::size_t j);

  std::size_t n() const { return static_cast<std::size_t>(v_.size()); }
  const Matrix& x() const { return x_; }
  const Vector& v() const { return v_; }

  TangentVector operator+(const TangentVector& o) const;
  TangentVector operator*(double s) const;

 private:
  TangentVector() = default;
  Matrix x_;
  Vector v_;
};

double log_pdf(const ManifoldPoint& p, const Vector& x);

/// Directional derivative of log p(x; theta) along t:
/// -1/2 tr(S^-1 X) + 1/2 y^T S^-1 X S^-1 y + v^T S^-1 y, y = x - mu.
double score(const ManifoldPoint& p, const TangentVector& t, const Vector& x);

/// v_s^T S^-1 v_t + 1/2 tr(S^-1 X_s S^-1 X_t).
double fisher_metric(const ManifoldPoint& p, const TangentVector& s, const TangentVector& t);

/// tr(S^-1 Xs S^-1 Xt S^-1 Xw) + the three one-covariance, two-mean terms.
double amari_cubic(const ManifoldPoint& p, const TangentVector& s, const TangentVector& t, const TangentVector& w);

/// g(nabla-hat_s t, w) - (alpha/2) C(s, t, w), with s, t, w extended as
/// left-invariant fields and the Levi-Civita part read off the exact table.
double alpha_connection_form(const ManifoldPoint& p, double alpha, const TangentVector& s, const TangentVector& t,
                             const TangentVector& w);

}  // namespace normgeo
