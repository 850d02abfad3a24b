#include "octic/scalar.hpp"

#include <sstream>

namespace octic {

namespace {

Int abs_int(const Int& n) { return n < 0 ? Int(-n) : n; }

}  // namespace

std::string FieldDesc::str() const {
  if (is_rational()) return "Q";
  std::ostringstream os;
  os << "Q(sqrt(" << d << "))";
  return os.str();
}

FieldDesc FieldDesc::quadratic(Int d) {
  if (d == 0 || d == 1) throw OcticError("quadratic field needs d not in {0,1}");
  if (squarefree_part(d) != d) throw OcticError("quadratic field needs square-free d");
  return FieldDesc{std::move(d)};
}

Scalar::Scalar(const Rational& a, const Rational& b, FieldDesc f)
    : a_(a), b_(b), field_(f) {
  if (b_ != 0 && field_.is_rational())
    throw FieldMismatch("irrational part in the rational field");
}

Scalar Scalar::root(FieldDesc f) {
  if (f.is_rational()) throw FieldMismatch("rational field has no adjoined root");
  return Scalar(Rational(0), Rational(1), f);
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_) throw FieldMismatch();
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  return Scalar(a_ + o.a_, b_ + o.b_, field_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  return Scalar(a_ - o.a_, b_ - o.b_, field_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  if (field_.is_rational()) return Scalar(a_ * o.a_, field_);
  Rational d(field_.d);
  return Scalar(a_ * o.a_ + d * b_ * o.b_, a_ * o.b_ + b_ * o.a_, field_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const { return Scalar(-a_, -b_, field_); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (field_.is_rational()) return Scalar(1 / a_, field_);
  Rational n = norm();
  if (n == 0) throw DivisionByZero();  // impossible for square-free d
  return Scalar(a_ / n, -b_ / n, field_);
}

Scalar Scalar::conjugate() const { return Scalar(a_, -b_, field_); }

Rational Scalar::norm() const {
  if (field_.is_rational()) return a_ * a_;
  return a_ * a_ - Rational(field_.d) * b_ * b_;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same_field(o);
  return a_ == o.a_ && b_ == o.b_;
}

Scalar Scalar::embed(FieldDesc target) const {
  if (field_ == target) return *this;
  if (!field_.is_rational())
    throw FieldMismatch("only the rational field embeds into Q(sqrt(d))");
  return Scalar(a_, Rational(0), target);
}

std::string Scalar::str() const {
  std::ostringstream os;
  if (b_ == 0) {
    os << a_;
    return os.str();
  }
  bool need_plus = false;
  if (a_ != 0) {
    os << a_;
    need_plus = true;
  }
  if (b_ == 1) {
    os << (need_plus ? "+" : "");
  } else if (b_ == -1) {
    os << "-";
  } else {
    if (need_plus && b_ > 0) os << "+";
    os << b_ << "*";
  }
  os << "s";
  return os.str();
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  Int num = numerator(r);
  Int den = denominator(r);
  Int sn = sqrt(num);
  if (sn * sn != num) return std::nullopt;
  Int sd = sqrt(den);
  if (sd * sd != den) return std::nullopt;
  return Rational(sn, sd);
}

Int squarefree_part(const Int& n) {
  if (n == 0) throw OcticError("square-free part of zero");
  Int rest = abs_int(n);
  Int core = n < 0 ? Int(-1) : Int(1);
  for (Int p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    int mult = 0;
    while (rest % p == 0) {
      rest /= p;
      ++mult;
    }
    if (mult % 2 == 1) core *= p;
  }
  return core * rest;
}

std::optional<Scalar> is_square(const Scalar& x) {
  const FieldDesc f = x.field();
  if (x.is_zero()) return Scalar::zero(f);
  if (x.b() == 0) {
    // y = p with p^2 = a, or y = q*sqrt(d) with d*q^2 = a.
    if (auto p = rational_sqrt(x.a())) return Scalar(*p, f);
    if (!f.is_rational()) {
      if (auto q = rational_sqrt(x.a() / Rational(f.d)))
        return Scalar(Rational(0), *q, f);
    }
    return std::nullopt;
  }
  // y = p + q*sqrt(d): p^2 + d q^2 = a, 2pq = b.  Then p^2 is a root of
  // 4u^2 - 4au + d b^2, so p^2 = (a +- sqrt(a^2 - d b^2)) / 2.
  auto root_n = rational_sqrt(x.norm());
  if (!root_n) return std::nullopt;
  for (int sign : {+1, -1}) {
    Rational p2 = (x.a() + Rational(sign) * *root_n) / 2;
    if (p2 <= 0) continue;
    if (auto p = rational_sqrt(p2)) {
      if (*p == 0) continue;
      Rational q = x.b() / (2 * *p);
      Scalar y(*p, q, f);
      if (y * y == x) return y;
    }
  }
  return std::nullopt;
}

}  // namespace octic
