#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace normgeo {

using Rational = mpq_class;

/// Raised when a zero element of the field is inverted.
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact element a + b*sqrt(2) of the real quadratic field Q(sqrt 2).
///
/// Both parts are arbitrary-precision rationals kept in lowest terms with a
/// positive denominator (GMP canonical form). Since sqrt(2) is irrational the
/// representation is unique, so equality is plain componentwise equality.
class QSqrt2 {
 public:
  QSqrt2() = default;
  QSqrt2(long value) : a_(value) {}  // NOLINT: integers embed implicitly
  QSqrt2(Rational a, Rational b = 0);

  static QSqrt2 sqrt2() { return QSqrt2(0, 1); }
  /// an/ad + (bn/bd)*sqrt2.
  static QSqrt2 from_fractions(long an, long ad, long bn = 0, long bd = 1);

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  /// Galois conjugate a - b*sqrt2.
  QSqrt2 conjugate() const { return QSqrt2(a_, -b_); }
  /// Field norm a^2 - 2 b^2; zero only for the zero element.
  Rational norm() const;

  std::optional<QSqrt2> try_inverse() const;
  /// Throws DivisionByZero on zero.
  QSqrt2 inverse() const;

  /// Exact sign of the real number a + b*sqrt2.
  int sign() const;
  double to_double() const;
  /// Sum of the bit lengths of all four integers; the elimination pivot key.
  std::size_t bit_size() const;

  QSqrt2& operator+=(const QSqrt2& o);
  QSqrt2& operator-=(const QSqrt2& o);
  QSqrt2& operator*=(const QSqrt2& o);
  QSqrt2& operator/=(const QSqrt2& o);

  friend QSqrt2 operator-(const QSqrt2& x) { return QSqrt2(-x.a_, -x.b_); }
  friend QSqrt2 operator+(QSqrt2 x, const QSqrt2& y) { return x += y; }
  friend QSqrt2 operator-(QSqrt2 x, const QSqrt2& y) { return x -= y; }
  friend QSqrt2 operator*(const QSqrt2& x, const QSqrt2& y);
  friend QSqrt2 operator/(const QSqrt2& x, const QSqrt2& y) { return x * y.inverse(); }

  friend bool operator==(const QSqrt2& x, const QSqrt2& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator<(const QSqrt2& x, const QSqrt2& y) { return (x - y).sign() < 0; }

  /// Canonical exact form "A + B*sqrt2" with A, B in GMP rational syntax
  /// ("-3/4", "0", "7"). parse(to_string()) reproduces the value bit-exactly.
  std::string to_string() const;
  /// Accepts the canonical form and the looser "A", "B*sqrt2", "sqrt2",
  /// "A - B*sqrt2", "-sqrt2" spellings. Throws std::invalid_argument.
  static QSqrt2 parse(std::string_view text);

  /// Human rendering such as "1/√2", "-3/2", "1 + √2".
  std::string pretty() const;

 private:
  Rational a_;
  Rational b_;
};

/// acc += x * y without materializing the product temporaries twice.
void addmul(QSqrt2& acc, const QSqrt2& x, const QSqrt2& y);
/// acc -= x * y.
void submul(QSqrt2& acc, const QSqrt2& x, const QSqrt2& y);

/// Parses a rational in "p", "-p" or "p/q" syntax, q != 0. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace normgeo
