#pragma once

// Hand-transcribed tables of brackets, U-map and Levi-Civita coefficients,
// instantiated for every index tuple that exists at a given n.

#include <map>
#include <utility>

#include "test_support.hpp"

namespace normgeo::testing {

inline QVector unit(const LieAlgebra& alg, std::size_t k, const QSqrt2& coef = QSqrt2(1)) {
  QVector v(alg.dim());
  v[k] = coef;
  return v;
}

inline QVector combo(const LieAlgebra& alg, std::initializer_list<std::pair<std::size_t, QSqrt2>> terms) {
  QVector v(alg.dim());
  for (const auto& [k, c] : terms) v[k] += c;
  return v;
}

inline QVector slice(const Tensor3& t, std::size_t a, std::size_t b) {
  QVector v(t.dim());
  for (std::size_t c = 0; c < t.dim(); ++c) v[c] = t(a, b, c);
  return v;
}

using Table = std::map<std::pair<std::size_t, std::size_t>, QVector>;

// Bracket list, instantiated for every index tuple that exists at n.
inline Table reference_brackets(const LieAlgebra& alg) {
  const std::size_t n = alg.n();
  Table t;
  auto put = [&](std::size_t a, std::size_t b, QVector v) {
    QVector neg(v.size());
    for (std::size_t c = 0; c < v.size(); ++c) neg[c] = -v[c];
    t[{a, b}] = v;
    t[{b, a}] = neg;
  };
  for (std::size_t i = 1; i <= n; ++i) put(M(alg, i), C(alg, i, i), unit(alg, M(alg, i), -kInvRoot2));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      put(M(alg, j), C(alg, i, j), unit(alg, M(alg, i), QSqrt2(-1)));
      put(C(alg, i, i), C(alg, i, j), unit(alg, C(alg, i, j), kInvRoot2));
      put(C(alg, i, j), C(alg, j, j), unit(alg, C(alg, i, j), kInvRoot2));
      for (std::size_t k = j + 1; k <= n; ++k) put(C(alg, i, j), C(alg, j, k), unit(alg, C(alg, i, k)));
    }
  return t;
}

// U-map list (symmetric), indices i < j < k.
inline Table reference_u(const LieAlgebra& alg) {
  const std::size_t n = alg.n();
  Table t;
  auto put = [&](std::size_t a, std::size_t b, QVector v) {
    t[{a, b}] = v;
    t[{b, a}] = v;
  };
  for (std::size_t i = 1; i <= n; ++i) {
    put(M(alg, i), M(alg, i), unit(alg, C(alg, i, i), kInvRoot2));
    put(M(alg, i), C(alg, i, i), unit(alg, M(alg, i), -kInv2Root2));
  }
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      put(M(alg, i), M(alg, j), unit(alg, C(alg, i, j), kHalf));
      put(M(alg, i), C(alg, i, j), unit(alg, M(alg, j), -kHalf));
      put(C(alg, i, i), C(alg, i, j), unit(alg, C(alg, i, j), -kInv2Root2));
      put(C(alg, i, j), C(alg, i, j), combo(alg, {{C(alg, i, i), kInvRoot2}, {C(alg, j, j), -kInvRoot2}}));
      put(C(alg, i, j), C(alg, j, j), unit(alg, C(alg, i, j), kInv2Root2));
      for (std::size_t k = j + 1; k <= n; ++k) {
        put(C(alg, i, k), C(alg, j, k), unit(alg, C(alg, i, j), kHalf));
        put(C(alg, i, j), C(alg, i, k), unit(alg, C(alg, j, k), -kHalf));
      }
    }
  return t;
}

// Levi-Civita entries as tabulated (i < j < k).
inline Table reference_levi_civita(const LieAlgebra& alg) {
  const std::size_t n = alg.n();
  Table t;
  for (std::size_t i = 1; i <= n; ++i) {
    t[{M(alg, i), M(alg, i)}] = unit(alg, C(alg, i, i), kInvRoot2);
    t[{M(alg, i), C(alg, i, i)}] = unit(alg, M(alg, i), -kInvRoot2);
  }
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      t[{M(alg, i), M(alg, j)}] = unit(alg, C(alg, i, j), kHalf);
      t[{M(alg, j), M(alg, i)}] = unit(alg, C(alg, i, j), kHalf);
      t[{M(alg, i), C(alg, i, j)}] = unit(alg, M(alg, j), -kHalf);
      t[{C(alg, i, j), M(alg, i)}] = unit(alg, M(alg, j), -kHalf);
      t[{C(alg, i, j), M(alg, j)}] = unit(alg, M(alg, i), kHalf);
      t[{C(alg, i, j), C(alg, i, i)}] = unit(alg, C(alg, i, j), -kInvRoot2);
      t[{C(alg, i, j), C(alg, j, j)}] = unit(alg, C(alg, i, j), kInvRoot2);
      t[{C(alg, i, j), C(alg, i, j)}] = combo(alg, {{C(alg, i, i), kInvRoot2}, {C(alg, j, j), -kInvRoot2}});
      for (std::size_t k = j + 1; k <= n; ++k) {
        t[{C(alg, i, j), C(alg, j, k)}] = unit(alg, C(alg, i, k), kHalf);
        t[{C(alg, i, j), C(alg, i, k)}] = unit(alg, C(alg, j, k), -kHalf);
        t[{C(alg, i, k), C(alg, i, j)}] = unit(alg, C(alg, j, k), -kHalf);
      }
    }
  return t;
}

// Entries absent from the printed table but forced by torsion-freeness
// (nabla_X Y - nabla_Y X = [X, Y]) together with the printed ones.
inline Table torsion_forced_levi_civita(const LieAlgebra& alg) {
  const std::size_t n = alg.n();
  Table t;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      t[{M(alg, j), C(alg, i, j)}] = unit(alg, M(alg, i), -kHalf);
      for (std::size_t k = j + 1; k <= n; ++k) {
        t[{C(alg, j, k), C(alg, i, j)}] = unit(alg, C(alg, i, k), -kHalf);
        t[{C(alg, i, k), C(alg, j, k)}] = unit(alg, C(alg, i, j), kHalf);
        t[{C(alg, j, k), C(alg, i, k)}] = unit(alg, C(alg, i, j), kHalf);
      }
    }
  return t;
}

}  // namespace normgeo::testing
