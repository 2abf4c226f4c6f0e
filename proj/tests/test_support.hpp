#pragma once

#include <cstdint>
#include <random>

#include "normgeo/affine_group.hpp"
#include "normgeo/gaussian.hpp"
#include "normgeo/lie_algebra.hpp"
#include "normgeo/qsqrt2.hpp"
#include "normgeo/tensors.hpp"

namespace normgeo::testing {

using Rng = std::mt19937_64;

inline long uniform_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// a + b sqrt2 with small random rationals.
inline QSqrt2 random_qsqrt2(Rng& rng, long range = 5) {
  return QSqrt2::from_fractions(uniform_int(rng, -range, range), uniform_int(rng, 1, range), uniform_int(rng, -range, range),
                                uniform_int(rng, 1, range));
}

inline QSqrt2 random_nonzero(Rng& rng) {
  for (;;) {
    QSqrt2 x = random_qsqrt2(rng);
    if (!x.is_zero()) return x;
  }
}

/// Random totally symmetric tensor with a given fraction of zero slots.
inline SymTensor3 random_sym(Rng& rng, std::size_t dim, double density = 1.0) {
  SymTensor3 k(dim);
  std::bernoulli_distribution keep(density);
  for (auto& v : k.values())
    if (keep(rng)) v = random_qsqrt2(rng, 3);
  return k;
}

inline Matrix random_spd(Rng& rng, std::size_t n) {
  std::normal_distribution<double> normal;
  Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (auto& x : m.reshaped()) x = normal(rng);
  Matrix s = m * m.transpose() + 0.5 * Matrix::Identity(m.rows(), m.cols());
  return (s + s.transpose()) / 2;
}

inline Vector random_vector(Rng& rng, std::size_t n) {
  std::normal_distribution<double> normal;
  Vector v(static_cast<Eigen::Index>(n));
  for (auto& x : v) x = normal(rng);
  return v;
}

inline ManifoldPoint random_point(Rng& rng, std::size_t n) {
  return ManifoldPoint::make(random_spd(rng, n), random_vector(rng, n));
}

inline TangentVector random_tangent(Rng& rng, std::size_t n) {
  std::normal_distribution<double> normal;
  Matrix x(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (auto& e : x.reshaped()) e = normal(rng);
  return TangentVector::make((x + x.transpose()) / 2, random_vector(rng, n));
}

inline GroupElement random_element(Rng& rng, std::size_t n) {
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> pos(0.3, 2.0);
  Matrix a = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    a(i, i) = pos(rng);
    for (Eigen::Index j = i + 1; j < a.cols(); ++j) a(i, j) = normal(rng);
  }
  return GroupElement::make(a, random_vector(rng, n));
}

inline std::size_t pos(const LieAlgebra& alg, BasisIndex idx) { return alg.position(idx); }
inline std::size_t M(const LieAlgebra& alg, std::size_t i) { return alg.position(BasisIndex::mean(i)); }
inline std::size_t C(const LieAlgebra& alg, std::size_t i, std::size_t j) { return alg.position(BasisIndex::cov(i, j)); }

inline const QSqrt2 kRoot2 = QSqrt2::sqrt2();
inline const QSqrt2 kInvRoot2 = QSqrt2::from_fractions(0, 1, 1, 2);       // 1/sqrt2
inline const QSqrt2 kInv2Root2 = QSqrt2::from_fractions(0, 1, 1, 4);      // 1/(2 sqrt2)
inline const QSqrt2 kHalf = QSqrt2::from_fractions(1, 2);

}  // namespace normgeo::testing
