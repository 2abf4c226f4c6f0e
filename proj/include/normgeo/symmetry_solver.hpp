#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "normgeo/lie_algebra.hpp"
#include "normgeo/qmatrix.hpp"
#include "normgeo/tensors.hpp"

namespace normgeo {

/// Row (a, b, c, e), a < b, encodes
///   [(nabla-hat_a K)(b, c)]^e - [(nabla-hat_b K)(a, c)]^e = 0
/// as a linear form in the unknowns K_{xyz} (one per unordered triple).
struct ConstraintLabel {
  std::size_t a, b, c, e;
};

/// Linear system "nabla-hat K is totally symmetric" over totally symmetric K.
struct ConstraintSystem {
  std::size_t n = 0;
  std::size_t d = 0;
  /// Sorted basis triple for each unknown column.
  std::vector<std::array<std::size_t, 3>> unknown_order;
  std::vector<SparseRow> rows;
  std::vector<ConstraintLabel> labels;

  std::size_t unknowns() const { return unknown_order.size(); }
  QMatrix to_dense() const;
  /// Residual of every row at x.
  QVector apply(std::span<const QSqrt2> x) const;
  bool annihilates(std::span<const QSqrt2> x) const;
};

/// Rows for all a < b and all c, e in canonical order, coefficients taken
/// from the exact Levi-Civita table. All-zero rows are kept.
ConstraintSystem assemble(std::size_t n);

/// C(d+2, 3): dimension of the space of totally symmetric K, i.e. of all
/// left-invariant statistical structures with the Fisher metric.
std::size_t statistical_space_dim(std::size_t n);

/// One entry of the expected kernel pattern, in units of the parameter p.
struct PatternEntry {
  std::string family;  // e.g. "K^(i,k)_{(i,j)(j,k)}"
  std::string label;   // concrete instance, e.g. "K^(1,3)_{(1,2)(2,3)}"
  std::array<std::size_t, 3> triple;
  QSqrt2 coefficient;  // value / p
};

/// Every nonzero coefficient of the Amari-Chentsov family, for the index
/// ranges that exist at this n.
std::vector<PatternEntry> expected_kernel_pattern(const LieAlgebra& algebra);
/// The same pattern as a tensor, scaled by p.
SymTensor3 pattern_tensor(const LieAlgebra& algebra, const QSqrt2& p);

/// One row of the cubic table, instantiated on concrete indices.
struct CubicTableEntry {
  std::string label;  // "C(e_11,e_1,e_1)"
  std::array<std::size_t, 3> triple;
  QSqrt2 expected;
  QSqrt2 computed;
};
std::vector<CubicTableEntry> cubic_table(const LieAlgebra& algebra);

struct CertificateCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct TheoremCertificate {
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t unknowns = 0;
  std::size_t statistical_space_dim = 0;
  std::size_t constraint_rows = 0;
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
  /// Kernel generator scaled so that K^1_{1(1,1)} = 1; empty unless kernel_dim == 1.
  QVector kernel_vector;
  /// Nonzero entries of kernel_vector with their family.
  std::vector<PatternEntry> nonzero_pattern;
  std::vector<CubicTableEntry> cubic_entries;
  std::vector<CertificateCheck> checks;
  ConstraintSystem system;

  bool passed() const;
  std::vector<std::string> failures() const;
};

/// Assembles, eliminates and records the kernel, its pattern and the
/// vanishing claims for each family of coefficients.
TheoremCertificate solve(std::size_t n);

/// solve(n) plus the alpha-family checks: conjugate symmetry and all four
/// predicates for alpha in {0, +-1, +-2, +-1/2, 1/3}, R(alpha) = R(-alpha), dual flatness, and the cubic
/// table at p = -sqrt2/2.
TheoremCertificate verify_theorem(std::size_t n);

}  // namespace normgeo
