#include "normgeo/tensors.hpp"

#include <algorithm>
#include <stdexcept>

namespace normgeo {

namespace {
bool all_zero(const std::vector<QSqrt2>& v) {
  return std::all_of(v.begin(), v.end(), [](const QSqrt2& x) { return x.is_zero(); });
}
}  // namespace

Tensor3& Tensor3::operator+=(const Tensor3& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("Tensor3: dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("Tensor3: dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Tensor3 Tensor3::scaled(const QSqrt2& s) const {
  Tensor3 out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

bool Tensor3::is_zero() const { return all_zero(data_); }

bool Tensor4::is_zero() const { return all_zero(data_); }

SymTensor3::SymTensor3(std::size_t dim) : dim_(dim), slot_of_(dim * dim * dim) {
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = a; b < dim; ++b)
      for (std::size_t c = b; c < dim; ++c) triples_.push_back({a, b, c});
  values_.resize(triples_.size());
  for (std::size_t s = 0; s < triples_.size(); ++s) {
    auto [a, b, c] = triples_[s];
    const std::size_t perms[6][3] = {{a, b, c}, {a, c, b}, {b, a, c}, {b, c, a}, {c, a, b}, {c, b, a}};
    for (const auto& p : perms) slot_of_[(p[0] * dim + p[1]) * dim + p[2]] = s;
  }
}

SymTensor3 SymTensor3::scaled(const QSqrt2& s) const {
  SymTensor3 out = *this;
  for (auto& x : out.values_) x *= s;
  return out;
}

SymTensor3& SymTensor3::operator+=(const SymTensor3& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("SymTensor3: dimension mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

bool SymTensor3::is_zero() const { return all_zero(values_); }

Tensor3 SymTensor3::expanded() const {
  Tensor3 out(dim_);
  for (std::size_t a = 0; a < dim_; ++a)
    for (std::size_t b = 0; b < dim_; ++b)
      for (std::size_t c = 0; c < dim_; ++c) out(a, b, c) = (*this)(a, b, c);
  return out;
}

}  // namespace normgeo
