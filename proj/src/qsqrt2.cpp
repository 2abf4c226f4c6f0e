#include "normgeo/qsqrt2.hpp"

#include <cctype>
#include <cmath>

namespace normgeo {

namespace {

std::size_t bits(const mpz_class& z) { return mpz_sizeinbase(z.get_mpz_t(), 2); }

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Renders |b|*sqrt2 for b != 0, without sign.
std::string pretty_surd(const Rational& b) {
  Rational t = abs(b);
  if (t == 1) return "√2";
  Rational twice = 2 * t;
  if (twice.get_num() == 1) {
    if (twice.get_den() == 1) return "1/√2";
    return "1/(" + twice.get_den().get_str() + "√2)";
  }
  if (t.get_den() == 1) return t.get_num().get_str() + "√2";
  return t.get_num().get_str() + "√2/" + t.get_den().get_str();
}

}  // namespace

QSqrt2::QSqrt2(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

QSqrt2 QSqrt2::from_fractions(long an, long ad, long bn, long bd) {
  if (ad == 0 || bd == 0) throw DivisionByZero("zero denominator");
  return QSqrt2(Rational(an, ad), Rational(bn, bd));
}

Rational QSqrt2::norm() const { return a_ * a_ - 2 * b_ * b_; }

std::optional<QSqrt2> QSqrt2::try_inverse() const {
  if (is_zero()) return std::nullopt;
  Rational n = norm();
  return QSqrt2(a_ / n, -b_ / n);
}

QSqrt2 QSqrt2::inverse() const {
  auto inv = try_inverse();
  if (!inv) throw DivisionByZero("inverse of zero in Q(sqrt2)");
  return *std::move(inv);
}

int QSqrt2::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: the larger of a^2 and 2b^2 wins
  int cmp_ab = cmp(a_ * a_, 2 * b_ * b_);
  return cmp_ab > 0 ? sa : sb;
}

double QSqrt2::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(2.0); }

std::size_t QSqrt2::bit_size() const {
  return bits(a_.get_num()) + bits(a_.get_den()) + bits(b_.get_num()) + bits(b_.get_den());
}

QSqrt2& QSqrt2::operator+=(const QSqrt2& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QSqrt2& QSqrt2::operator-=(const QSqrt2& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QSqrt2 operator*(const QSqrt2& x, const QSqrt2& y) {
  QSqrt2 r;
  if (x.is_zero() || y.is_zero()) return r;
  r.a_ = x.a_ * y.a_;
  if (sgn(x.b_) != 0 && sgn(y.b_) != 0) r.a_ += 2 * x.b_ * y.b_;
  r.b_ = x.a_ * y.b_;
  r.b_ += x.b_ * y.a_;
  return r;
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& o) { return *this = *this * o; }

QSqrt2& QSqrt2::operator/=(const QSqrt2& o) { return *this = *this * o.inverse(); }

void addmul(QSqrt2& acc, const QSqrt2& x, const QSqrt2& y) {
  if (x.is_zero() || y.is_zero()) return;
  acc += x * y;
}

void submul(QSqrt2& acc, const QSqrt2& x, const QSqrt2& y) {
  if (x.is_zero() || y.is_zero()) return;
  acc -= x * y;
}

std::string QSqrt2::to_string() const { return a_.get_str() + " + " + b_.get_str() + "*sqrt2"; }

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(negative ? mpz_class(-n) : n, d);
  r.canonicalize();
  return r;
}

QSqrt2 QSqrt2::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty Q(sqrt2) literal");

  static constexpr std::string_view kSurd = "sqrt2";
  Rational a = 0;
  Rational b = 0;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    // leading sign run, e.g. "+-" from "1/2 + -3/4*sqrt2"
    int sign = 1;
    bool saw_sign = false;
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sign = -sign;
      saw_sign = true;
      ++pos;
    }
    if (!first && !saw_sign) throw std::invalid_argument("missing operator in '" + s + "'");
    first = false;

    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string_view term(s.data() + pos, end - pos);
    if (term.empty()) throw std::invalid_argument("dangling sign in '" + s + "'");

    Rational value;
    bool surd = false;
    if (term == kSurd) {
      value = 1;
      surd = true;
    } else if (term.size() > kSurd.size() + 1 && term.ends_with(kSurd) &&
               term[term.size() - kSurd.size() - 1] == '*') {
      value = parse_rational(term.substr(0, term.size() - kSurd.size() - 1));
      surd = true;
    } else {
      value = parse_rational(term);
    }
    if (sign < 0) value = -value;
    (surd ? b : a) += value;
    pos = end;
  }
  return QSqrt2(a, b);
}

std::string QSqrt2::pretty() const {
  if (sgn(b_) == 0) return a_.get_str();
  if (sgn(a_) == 0) return (sgn(b_) < 0 ? "-" : "") + pretty_surd(b_);
  return a_.get_str() + (sgn(b_) < 0 ? " - " : " + ") + pretty_surd(b_);
}

}  // namespace normgeo
