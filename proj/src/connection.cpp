#include "normgeo/connection.hpp"

#include <stdexcept>

namespace normgeo {

namespace {

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("connection: dimension mismatch");
}

// true when t(p(a,b,c,e)) == t(a,b,c,e) for the given slot swap
bool swap_invariant(const Tensor4& t, int s0, int s1) {
  const std::size_t d = t.dim();
  std::size_t idx[4];
  for (idx[0] = 0; idx[0] < d; ++idx[0])
    for (idx[1] = 0; idx[1] < d; ++idx[1])
      for (idx[2] = 0; idx[2] < d; ++idx[2])
        for (idx[3] = 0; idx[3] < d; ++idx[3]) {
          if (idx[s0] >= idx[s1]) continue;
          std::size_t sw[4] = {idx[0], idx[1], idx[2], idx[3]};
          std::swap(sw[s0], sw[s1]);
          if (t(idx[0], idx[1], idx[2], idx[3]) != t(sw[0], sw[1], sw[2], sw[3])) return false;
        }
  return true;
}

}  // namespace

ConnCoeffs from_difference(const LieAlgebra& algebra, const SymTensor3& k) {
  require_same_dim(algebra.dim(), k.dim());
  ConnCoeffs out = algebra.levi_civita();
  const std::size_t d = k.dim();
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c) out.gamma(a, b, c) += k(a, b, c);
  return out;
}

ConnCoeffs conjugate(const ConnCoeffs& c) {
  const std::size_t d = c.dim();
  ConnCoeffs out{Tensor3(d)};
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t e = 0; e < d; ++e) out.gamma(a, b, e) = -c.gamma(a, e, b);
  return out;
}

CurvatureTensor curvature(const LieAlgebra& algebra, const ConnCoeffs& c) {
  require_same_dim(algebra.dim(), c.dim());
  const std::size_t d = c.dim();
  const Tensor3& g = c.gamma;
  const Tensor3& sc = algebra.structure_constants();
  CurvatureTensor out{Tensor4(d)};
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b)
      for (std::size_t z = 0; z < d; ++z) {
        for (std::size_t f = 0; f < d; ++f) {
          // nabla_a nabla_b e_z
          if (const QSqrt2& gbz = g(b, z, f); !gbz.is_zero())
            for (std::size_t e = 0; e < d; ++e) addmul(out.r(a, b, z, e), gbz, g(a, f, e));
          // - nabla_b nabla_a e_z
          if (const QSqrt2& gaz = g(a, z, f); !gaz.is_zero())
            for (std::size_t e = 0; e < d; ++e) submul(out.r(a, b, z, e), gaz, g(b, f, e));
          // - nabla_[a,b] e_z
          if (const QSqrt2& cab = sc(a, b, f); !cab.is_zero())
            for (std::size_t e = 0; e < d; ++e) submul(out.r(a, b, z, e), cab, g(f, z, e));
        }
        for (std::size_t e = 0; e < d; ++e) out.r(b, a, z, e) = -out.r(a, b, z, e);
      }
  return out;
}

bool is_conjugate_symmetric(const LieAlgebra& algebra, const ConnCoeffs& c) {
  return curvature(algebra, c) == curvature(algebra, conjugate(c));
}

Tensor4 nabla_hat_K(const LieAlgebra& algebra, const SymTensor3& k) {
  require_same_dim(algebra.dim(), k.dim());
  const std::size_t d = k.dim();
  const Tensor3& lc = algebra.levi_civita().gamma;
  Tensor4 out(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = b; c < d; ++c) {
        for (std::size_t f = 0; f < d; ++f) {
          // nabla-hat_a (K(b,c)) - K(nabla-hat_a b, c) - K(b, nabla-hat_a c)
          if (const QSqrt2& kbc = k(b, c, f); !kbc.is_zero())
            for (std::size_t e = 0; e < d; ++e) addmul(out(a, b, c, e), kbc, lc(a, f, e));
          if (const QSqrt2& lab = lc(a, b, f); !lab.is_zero())
            for (std::size_t e = 0; e < d; ++e) submul(out(a, b, c, e), lab, k(f, c, e));
          if (const QSqrt2& lac = lc(a, c, f); !lac.is_zero())
            for (std::size_t e = 0; e < d; ++e) submul(out(a, b, c, e), lac, k(b, f, e));
        }
        if (b != c)
          for (std::size_t e = 0; e < d; ++e) out(a, c, b, e) = out(a, b, c, e);
      }
  return out;
}

Tensor4 covariant_cubic(const ConnCoeffs& conn, const SymTensor3& k) {
  require_same_dim(conn.dim(), k.dim());
  const std::size_t d = k.dim();
  const Tensor3& g = conn.gamma;
  const SymTensor3 cubic = k.scaled(-2);
  Tensor4 out(d);
  // (nabla_a C)(b,c,e) = -C(nabla_a b, c, e) - C(b, nabla_a c, e) - C(b, c, nabla_a e);
  // symmetric in (b, c, e), so only sorted triples are computed.
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t s = 0; s < cubic.size(); ++s) {
      auto [b, c, e] = cubic.triple(s);
      QSqrt2 acc;
      for (std::size_t f = 0; f < d; ++f) {
        submul(acc, g(a, b, f), cubic(f, c, e));
        submul(acc, g(a, c, f), cubic(b, f, e));
        submul(acc, g(a, e, f), cubic(b, c, f));
      }
      const std::size_t perms[6][3] = {{b, c, e}, {b, e, c}, {c, b, e}, {c, e, b}, {e, b, c}, {e, c, b}};
      for (const auto& p : perms) out(a, p[0], p[1], p[2]) = acc;
    }
  return out;
}

bool is_totally_symmetric(const Tensor4& t) {
  return swap_invariant(t, 0, 1) && swap_invariant(t, 1, 2) && swap_invariant(t, 2, 3);
}

bool is_symmetric_in_lower_three(const Tensor4& t) { return swap_invariant(t, 0, 1) && swap_invariant(t, 1, 2); }

PredicateSuite predicate_suite(const LieAlgebra& algebra, const SymTensor3& k) {
  PredicateSuite out;
  const ConnCoeffs conn = from_difference(algebra, k);
  out.conjugate_symmetric = is_conjugate_symmetric(algebra, conn);
  out.nabla_c_symmetric = is_totally_symmetric(covariant_cubic(conn, k));
  out.nabla_hat_c_symmetric = is_totally_symmetric(covariant_cubic(algebra.levi_civita(), k));
  out.nabla_hat_k_symmetric = is_symmetric_in_lower_three(nabla_hat_K(algebra, k));
  return out;
}

SymTensor3 amari_difference(const LieAlgebra& algebra) {
  return algebra.cubic().scaled(QSqrt2::from_fractions(-1, 2));
}

ConnCoeffs alpha_connection(const LieAlgebra& algebra, const QSqrt2& alpha) {
  return from_difference(algebra, amari_difference(algebra).scaled(alpha));
}

bool is_torsion_free(const LieAlgebra& algebra, const ConnCoeffs& c) {
  const std::size_t d = c.dim();
  const Tensor3& sc = algebra.structure_constants();
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t e = 0; e < d; ++e)
        if (c.gamma(a, b, e) - c.gamma(b, a, e) != sc(a, b, e)) return false;
  return true;
}

ConnCoeffs mean(const ConnCoeffs& x, const ConnCoeffs& y) {
  ConnCoeffs out = x;
  out.gamma += y.gamma;
  out.gamma = out.gamma.scaled(QSqrt2::from_fractions(1, 2));
  return out;
}

Tensor3 half_difference(const ConnCoeffs& x, const ConnCoeffs& y) {
  Tensor3 out = x.gamma;
  out -= y.gamma;
  return out.scaled(QSqrt2::from_fractions(1, 2));
}

}  // namespace normgeo
