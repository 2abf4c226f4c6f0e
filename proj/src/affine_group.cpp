#include "normgeo/affine_group.hpp"

#include <cmath>
#include <numbers>

#include "normgeo/lie_algebra.hpp"

namespace normgeo {

GroupElement GroupElement::make(const Matrix& a, const Vector& b) {
  if (a.rows() == 0 || a.rows() != a.cols()) throw std::invalid_argument("group element: A must be square, n >= 1");
  if (a.rows() != b.size()) throw std::invalid_argument("group element: A and b have different dimensions");
  if (!a.allFinite() || !b.allFinite()) throw std::invalid_argument("group element: non-finite entries");
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    if (!(a(i, i) > 0)) throw std::invalid_argument("group element: diagonal of A must be positive");
    for (Eigen::Index j = 0; j < i; ++j)
      if (a(i, j) != 0) throw std::invalid_argument("group element: A must be upper-triangular");
  }
  GroupElement g;
  g.a_ = a;
  g.b_ = b;
  return g;
}

GroupElement GroupElement::identity(std::size_t n) { return make(Matrix::Identity(n, n), Vector::Zero(n)); }

Matrix GroupElement::matrix() const {
  const Eigen::Index n = a_.rows();
  Matrix m = Matrix::Identity(n + 1, n + 1);
  m.topLeftCorner(n, n) = a_;
  m.topRightCorner(n, 1) = b_;
  return m;
}

GroupElement group_mul(const GroupElement& g, const GroupElement& h) {
  if (g.n() != h.n()) throw std::invalid_argument("group_mul: dimension mismatch");
  Matrix a = (g.a() * h.a()).triangularView<Eigen::Upper>();
  return GroupElement::make(a, g.a() * h.b() + g.b());
}

GroupElement group_inv(const GroupElement& g) {
  const Matrix a = upper_inverse(g.a());
  return GroupElement::make(a, -(a * g.b()));
}

ManifoldPoint act(const GroupElement& g, const ManifoldPoint& p) {
  if (g.n() != p.n()) throw std::invalid_argument("act: dimension mismatch");
  Matrix s = g.a() * p.sigma() * g.a().transpose();
  s = (s + s.transpose()) / 2;
  return ManifoldPoint::make(s, g.a() * p.mu() + g.b());
}

TangentVector act_tangent(const GroupElement& g, const TangentVector& t) {
  if (g.n() != t.n()) throw std::invalid_argument("act_tangent: dimension mismatch");
  Matrix x = g.a() * t.x() * g.a().transpose();
  x = (x + x.transpose()) / 2;
  return TangentVector::make(x, g.a() * t.v());
}

ManifoldPoint phi(const GroupElement& g) {
  Matrix s = g.a() * g.a().transpose();
  s = (s + s.transpose()) / 2;
  return ManifoldPoint::make(s, g.b());
}

GroupElement phi_inv(const ManifoldPoint& p) { return GroupElement::make(p.chol(), p.mu()); }

Vector pull_back_to_identity(const ManifoldPoint& p, const TangentVector& t) {
  if (p.n() != t.n()) throw std::invalid_argument("pull_back_to_identity: dimension mismatch");
  const TangentVector at_identity = act_tangent(group_inv(phi_inv(p)), t);
  const Matrix& x = at_identity.x();
  const Vector& v = at_identity.v();
  const LieAlgebra& algebra = lie_algebra(p.n());
  Vector out(static_cast<Eigen::Index>(algebra.dim()));
  for (std::size_t k = 0; k < algebra.dim(); ++k) {
    const BasisIndex& idx = algebra.index(k);
    const auto i = static_cast<Eigen::Index>(idx.i - 1), j = static_cast<Eigen::Index>(idx.j - 1);
    if (idx.is_mean())
      out(k) = v(i);
    else if (i != j)
      out(k) = x(i, j);  // U_ij = X_ij
    else
      out(k) = std::numbers::sqrt2 * x(i, i) / 2;  // sqrt2 * U_ii, U_ii = X_ii / 2
  }
  return out;
}

TangentVector push_forward_from_identity(const ManifoldPoint& p, const Vector& coeffs) {
  const LieAlgebra& algebra = lie_algebra(p.n());
  if (static_cast<std::size_t>(coeffs.size()) != algebra.dim())
    throw std::invalid_argument("push_forward_from_identity: wrong coefficient count");
  const auto n = static_cast<Eigen::Index>(p.n());
  Matrix u = Matrix::Zero(n, n);
  Vector v = Vector::Zero(n);
  for (std::size_t k = 0; k < algebra.dim(); ++k) {
    const BasisIndex& idx = algebra.index(k);
    const auto i = static_cast<Eigen::Index>(idx.i - 1), j = static_cast<Eigen::Index>(idx.j - 1);
    if (idx.is_mean())
      v(i) = coeffs(k);
    else if (i != j)
      u(i, j) = coeffs(k);
    else
      u(i, i) = coeffs(k) / std::numbers::sqrt2;
  }
  // d(phi) at the identity: (U, u) -> (U + U^T, u)
  return act_tangent(phi_inv(p), TangentVector::make(u + u.transpose(), v));
}

}  // namespace normgeo
