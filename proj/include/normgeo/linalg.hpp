#pragma once

#include <stdexcept>

#include <Eigen/Dense>

namespace normgeo {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

class NotPositiveDefinite : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Smallest accepted pivot in upper_cholesky.
inline constexpr double kPivotTolerance = 1e-12;
/// Largest tolerated |S_ij - S_ji| before a matrix is rejected as asymmetric.
inline constexpr double kSymmetryTolerance = 1e-12;

/// Sigma = A A^T with A upper-triangular and positive on the diagonal.
/// Eliminates from the last row/column upward; throws NotPositiveDefinite
/// when a pivot drops below kPivotTolerance.
Matrix upper_cholesky(const Matrix& sigma);

/// Inverse of an upper-triangular matrix with nonzero diagonal.
Matrix upper_inverse(const Matrix& a);

/// max |m_ij - m_ji|; m must be square.
double asymmetry(const Matrix& m);

/// Rejects non-finite or asymmetric input, then returns (m + m^T) / 2.
Matrix checked_symmetric(const Matrix& m, const char* what);

/// |x - y| / max(1, |x|, |y|).
double relative_error(double x, double y);
/// |x - y| / max(|x|, |y|); 0 when both are 0.
double relative_difference(double x, double y);

}  // namespace normgeo
