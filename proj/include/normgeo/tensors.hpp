#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "normgeo/qsqrt2.hpp"

namespace normgeo {

/// Dense d x d x d array over Q(sqrt2), index order (a, b, c) row-major.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(std::size_t dim) : dim_(dim), data_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }
  QSqrt2& operator()(std::size_t a, std::size_t b, std::size_t c) { return data_[(a * dim_ + b) * dim_ + c]; }
  const QSqrt2& operator()(std::size_t a, std::size_t b, std::size_t c) const {
    return data_[(a * dim_ + b) * dim_ + c];
  }

  Tensor3& operator+=(const Tensor3& o);
  Tensor3& operator-=(const Tensor3& o);
  Tensor3 scaled(const QSqrt2& s) const;
  bool is_zero() const;
  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<QSqrt2> data_;
};

/// Dense d^4 array over Q(sqrt2), index order (a, b, c, e) row-major.
class Tensor4 {
 public:
  Tensor4() = default;
  explicit Tensor4(std::size_t dim) : dim_(dim), data_(dim * dim * dim * dim) {}

  std::size_t dim() const { return dim_; }
  QSqrt2& operator()(std::size_t a, std::size_t b, std::size_t c, std::size_t e) {
    return data_[((a * dim_ + b) * dim_ + c) * dim_ + e];
  }
  const QSqrt2& operator()(std::size_t a, std::size_t b, std::size_t c, std::size_t e) const {
    return data_[((a * dim_ + b) * dim_ + c) * dim_ + e];
  }

  bool is_zero() const;
  friend bool operator==(const Tensor4&, const Tensor4&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<QSqrt2> data_;
};

/// Totally symmetric rank-3 array: one stored value per unordered triple.
///
/// Slot numbering enumerates sorted triples a <= b <= c lexicographically,
/// which is also the unknown ordering of the symmetry solver.
class SymTensor3 {
 public:
  SymTensor3() = default;
  explicit SymTensor3(std::size_t dim);

  std::size_t dim() const { return dim_; }
  /// C(d+2, 3).
  std::size_t size() const { return values_.size(); }

  QSqrt2& operator()(std::size_t a, std::size_t b, std::size_t c) { return values_[slot(a, b, c)]; }
  const QSqrt2& operator()(std::size_t a, std::size_t b, std::size_t c) const { return values_[slot(a, b, c)]; }

  std::size_t slot(std::size_t a, std::size_t b, std::size_t c) const {
    return slot_of_[(a * dim_ + b) * dim_ + c];
  }
  /// Sorted triple stored at a slot.
  const std::array<std::size_t, 3>& triple(std::size_t s) const { return triples_[s]; }
  const std::vector<QSqrt2>& values() const { return values_; }
  std::vector<QSqrt2>& values() { return values_; }

  SymTensor3 scaled(const QSqrt2& s) const;
  SymTensor3& operator+=(const SymTensor3& o);
  bool is_zero() const;
  /// Full d^3 array with every permutation filled in.
  Tensor3 expanded() const;
  friend bool operator==(const SymTensor3& x, const SymTensor3& y) {
    return x.dim_ == y.dim_ && x.values_ == y.values_;
  }

  static std::size_t count(std::size_t dim) { return dim * (dim + 1) * (dim + 2) / 6; }

 private:
  std::size_t dim_ = 0;
  std::vector<std::size_t> slot_of_;
  std::vector<std::array<std::size_t, 3>> triples_;
  std::vector<QSqrt2> values_;
};

/// Coefficients of a left-invariant connection at the identity:
/// gamma(a, b, c) = Gamma^c_{ab}, i.e. nabla_{e_a} e_b = sum_c Gamma^c_{ab} e_c.
struct ConnCoeffs {
  Tensor3 gamma;
  std::size_t dim() const { return gamma.dim(); }
  friend bool operator==(const ConnCoeffs&, const ConnCoeffs&) = default;
};

/// r(a, b, c, e) = R^e_{abc}, i.e. R(e_a, e_b) e_c = sum_e R^e_{abc} e_e.
struct CurvatureTensor {
  Tensor4 r;
  std::size_t dim() const { return r.dim(); }
  bool is_zero() const { return r.is_zero(); }
  friend bool operator==(const CurvatureTensor&, const CurvatureTensor&) = default;
};

}  // namespace normgeo
