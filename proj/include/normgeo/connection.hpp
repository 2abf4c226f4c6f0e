#pragma once

#include "normgeo/lie_algebra.hpp"
#include "normgeo/tensors.hpp"

namespace normgeo {

// Left-invariant connections are represented by their coefficients over the
// orthonormal basis at the identity. Because the basis is orthonormal, the
// difference tensor K^c_{ab} and the cubic form C(a,b,c) = -2 K^c_{ab} share
// the same totally symmetric storage.

/// Levi-Civita + K.
ConnCoeffs from_difference(const LieAlgebra& algebra, const SymTensor3& k);

/// Gamma*^c_{ab} = -Gamma^b_{ac}, from X g(Y,Z) = 0 on left-invariant fields.
ConnCoeffs conjugate(const ConnCoeffs& c);

/// R^e_{abc} = sum_f (Gamma^f_{bc} Gamma^e_{af} - Gamma^f_{ac} Gamma^e_{bf})
///             - sum_f c^f_{ab} Gamma^e_{fc}.
CurvatureTensor curvature(const LieAlgebra& algebra, const ConnCoeffs& c);

/// R == R* entrywise.
bool is_conjugate_symmetric(const LieAlgebra& algebra, const ConnCoeffs& c);

/// (nabla-hat_a K)(b, c)^e, stored at (a, b, c, e).
Tensor4 nabla_hat_K(const LieAlgebra& algebra, const SymTensor3& k);

/// (nabla_a C)(b, c, e) for the connection Gamma acting on the cubic form of k,
/// stored at (a, b, c, e).
Tensor4 covariant_cubic(const ConnCoeffs& c, const SymTensor3& k);

/// Totally symmetric under every permutation of its four slots.
bool is_totally_symmetric(const Tensor4& t);
/// Symmetric in the first three slots; the last is a free upper index.
bool is_symmetric_in_lower_three(const Tensor4& t);

/// Conditions (2)-(5) of the characterization, evaluated exactly for the
/// statistical structure Levi-Civita + k.
struct PredicateSuite {
  bool conjugate_symmetric = false;         // R = R*
  bool nabla_c_symmetric = false;           // nabla C totally symmetric
  bool nabla_hat_c_symmetric = false;       // nabla-hat C totally symmetric
  bool nabla_hat_k_symmetric = false;       // nabla-hat K totally symmetric

  bool all() const { return conjugate_symmetric && nabla_c_symmetric && nabla_hat_c_symmetric && nabla_hat_k_symmetric; }
  bool agree() const {
    return conjugate_symmetric == nabla_c_symmetric && nabla_c_symmetric == nabla_hat_c_symmetric &&
           nabla_hat_c_symmetric == nabla_hat_k_symmetric;
  }
};

PredicateSuite predicate_suite(const LieAlgebra& algebra, const SymTensor3& k);

/// K^A = -C^A / 2 from the cubic form table.
SymTensor3 amari_difference(const LieAlgebra& algebra);

/// Levi-Civita + alpha K^A.
ConnCoeffs alpha_connection(const LieAlgebra& algebra, const QSqrt2& alpha);

/// Torsion-free: Gamma^c_{ab} - Gamma^c_{ba} = c^c_{ab}.
bool is_torsion_free(const LieAlgebra& algebra, const ConnCoeffs& c);

/// Coefficientwise (x + y) / 2 and (x - y) / 2.
ConnCoeffs mean(const ConnCoeffs& x, const ConnCoeffs& y);
Tensor3 half_difference(const ConnCoeffs& x, const ConnCoeffs& y);

}  // namespace normgeo
