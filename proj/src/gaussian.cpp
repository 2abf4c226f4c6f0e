#include "normgeo/gaussian.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "normgeo/affine_group.hpp"
#include "normgeo/lie_algebra.hpp"

namespace normgeo {

namespace {

void require_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                                std::to_string(b) + ")");
}

}  // namespace

ManifoldPoint ManifoldPoint::make(const Matrix& sigma, const Vector& mu) {
  if (sigma.rows() == 0) throw std::invalid_argument("sigma must be at least 1x1");
  if (sigma.rows() != mu.size()) throw std::invalid_argument("sigma and mu have different dimensions");
  if (!mu.allFinite()) throw std::invalid_argument("mu has non-finite entries");
  ManifoldPoint p;
  p.sigma_ = checked_symmetric(sigma, "sigma");
  p.mu_ = mu;
  p.chol_ = upper_cholesky(p.sigma_);
  const Matrix a_inv = upper_inverse(p.chol_);
  // S^-1 = A^-T A^-1
  p.sigma_inv_ = a_inv.transpose() * a_inv;
  p.sigma_inv_ = (p.sigma_inv_ + p.sigma_inv_.transpose()) / 2;
  p.log_det_ = 2 * p.chol_.diagonal().array().log().sum();
  return p;
}

ManifoldPoint ManifoldPoint::standard(std::size_t n) {
  return make(Matrix::Identity(n, n), Vector::Zero(n));
}

TangentVector TangentVector::make(const Matrix& x, const Vector& v) {
  if (x.rows() != v.size()) throw std::invalid_argument("tangent: X and v have different dimensions");
  if (!v.allFinite()) throw std::invalid_argument("tangent: v has non-finite entries");
  TangentVector t;
  t.x_ = checked_symmetric(x, "tangent X");
  t.v_ = v;
  return t;
}

TangentVector TangentVector::zero(std::size_t n) { return make(Matrix::Zero(n, n), Vector::Zero(n)); }

TangentVector TangentVector::mean_direction(std::size_t n, std::size_t i) {
  if (i >= n) throw std::out_of_range("mean_direction: index out of range");
  Vector v = Vector::Zero(n);
  v(i) = 1;
  return make(Matrix::Zero(n, n), v);
}

TangentVector TangentVector::cov_direction(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n) throw std::out_of_range("cov_direction: index out of range");
  Matrix x = Matrix::Zero(n, n);
  x(i, j) = 1;
  x(j, i) = 1;
  return make(x, Vector::Zero(n));
}

TangentVector TangentVector::operator+(const TangentVector& o) const {
  require_dim(n(), o.n(), "tangent +");
  TangentVector t;
  t.x_ = x_ + o.x_;
  t.v_ = v_ + o.v_;
  return t;
}

TangentVector TangentVector::operator*(double s) const {
  TangentVector t;
  t.x_ = x_ * s;
  t.v_ = v_ * s;
  return t;
}

double log_pdf(const ManifoldPoint& p, const Vector& x) {
  require_dim(p.n(), static_cast<std::size_t>(x.size()), "log_pdf");
  const Vector y = x - p.mu();
  const double n = static_cast<double>(p.n());
  return -0.5 * (n * std::log(2 * std::numbers::pi) + p.log_det_sigma() + y.dot(p.sigma_inv() * y));
}

double score(const ManifoldPoint& p, const TangentVector& t, const Vector& x) {
  require_dim(p.n(), t.n(), "score");
  require_dim(p.n(), static_cast<std::size_t>(x.size()), "score");
  const Matrix& si = p.sigma_inv();
  const Vector w = si * (x - p.mu());
  return -0.5 * (si * t.x()).trace() + 0.5 * w.dot(t.x() * w) + t.v().dot(w);
}

double fisher_metric(const ManifoldPoint& p, const TangentVector& s, const TangentVector& t) {
  require_dim(p.n(), s.n(), "fisher_metric");
  require_dim(p.n(), t.n(), "fisher_metric");
  const Matrix& si = p.sigma_inv();
  return s.v().dot(si * t.v()) + 0.5 * (si * s.x() * si * t.x()).trace();
}

double amari_cubic(const ManifoldPoint& p, const TangentVector& s, const TangentVector& t, const TangentVector& w) {
  require_dim(p.n(), s.n(), "amari_cubic");
  require_dim(p.n(), t.n(), "amari_cubic");
  require_dim(p.n(), w.n(), "amari_cubic");
  const Matrix& si = p.sigma_inv();
  const Matrix ms = si * s.x(), mt = si * t.x(), mw = si * w.x();
  const Vector us = si * s.v(), ut = si * t.v(), uw = si * w.v();
  return (ms * mt * mw).trace() + ut.dot(s.x() * uw) + us.dot(t.x() * uw) + us.dot(w.x() * ut);
}

double alpha_connection_form(const ManifoldPoint& p, double alpha, const TangentVector& s, const TangentVector& t,
                             const TangentVector& w) {
  const LieAlgebra& algebra = lie_algebra(p.n());
  const Vector cs = pull_back_to_identity(p, s), ct = pull_back_to_identity(p, t), cw = pull_back_to_identity(p, w);
  const Tensor3& lc = algebra.levi_civita().gamma;
  const std::size_t d = algebra.dim();
  double levi = 0;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c)
        if (!lc(a, b, c).is_zero()) levi += cs(a) * ct(b) * cw(c) * lc(a, b, c).to_double();
  return levi - alpha / 2 * amari_cubic(p, s, t, w);
}

}  // namespace normgeo
