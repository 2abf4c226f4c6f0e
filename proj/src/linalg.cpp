#include "normgeo/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace normgeo {

Matrix upper_cholesky(const Matrix& sigma) {
  if (sigma.rows() != sigma.cols()) throw std::invalid_argument("upper_cholesky: matrix is not square");
  const Eigen::Index n = sigma.rows();
  Matrix a = Matrix::Zero(n, n);
  for (Eigen::Index j = n - 1; j >= 0; --j) {
    double pivot = sigma(j, j);
    for (Eigen::Index k = j + 1; k < n; ++k) pivot -= a(j, k) * a(j, k);
    if (!(pivot >= kPivotTolerance))
      throw NotPositiveDefinite("matrix is not positive definite (pivot " + std::to_string(pivot) + " at index " +
                                std::to_string(j) + ")");
    a(j, j) = std::sqrt(pivot);
    for (Eigen::Index i = 0; i < j; ++i) {
      double s = sigma(i, j);
      for (Eigen::Index k = j + 1; k < n; ++k) s -= a(i, k) * a(j, k);
      a(i, j) = s / a(j, j);
    }
  }
  return a;
}

Matrix upper_inverse(const Matrix& a) {
  const Eigen::Index n = a.rows();
  Matrix out = a.triangularView<Eigen::Upper>().solve(Matrix::Identity(n, n));
  return out.triangularView<Eigen::Upper>();
}

double asymmetry(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("asymmetry: matrix is not square");
  return m.size() == 0 ? 0.0 : (m - m.transpose()).cwiseAbs().maxCoeff();
}

Matrix checked_symmetric(const Matrix& m, const char* what) {
  if (m.rows() != m.cols()) throw std::invalid_argument(std::string(what) + " is not square");
  if (!m.allFinite()) throw std::invalid_argument(std::string(what) + " has non-finite entries");
  const double asym = asymmetry(m);
  if (asym > kSymmetryTolerance)
    throw std::invalid_argument(std::string(what) + " is not symmetric (max asymmetry " + std::to_string(asym) + ")");
  return (m + m.transpose()) / 2;
}

double relative_error(double x, double y) {
  return std::abs(x - y) / std::max({1.0, std::abs(x), std::abs(y)});
}

double relative_difference(double x, double y) {
  const double scale = std::max(std::abs(x), std::abs(y));
  return scale == 0.0 ? 0.0 : std::abs(x - y) / scale;
}

}  // namespace normgeo
