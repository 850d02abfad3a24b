#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "octic/errors.hpp"

namespace octic {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Coefficient field: the rationals or a quadratic extension Q(sqrt(d)).
/// d = 0 encodes the rationals; otherwise d is square-free and != 0, 1.
struct FieldDesc {
  Int d = 0;

  bool is_rational() const { return d == 0; }
  bool operator==(const FieldDesc& o) const { return d == o.d; }
  bool operator!=(const FieldDesc& o) const { return d != o.d; }
  std::string str() const;

  static FieldDesc rational() { return FieldDesc{}; }
  static FieldDesc quadratic(Int d);
};

/// Element a + b*sqrt(d) of Q(sqrt(d)); b stays 0 over the rationals.
/// Rationals are kept in lowest terms with positive denominator (the
/// underlying cpp_rational canonicalizes), so operator== is exact equality.
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Rational& a, FieldDesc f) : a_(a), field_(f) {}
  Scalar(const Rational& a, const Rational& b, FieldDesc f);
  /// Rational constant in the rational field.
  static Scalar of(long long n) { return Scalar(Rational(n), FieldDesc{}); }
  static Scalar of(const Rational& r) { return Scalar(r, FieldDesc{}); }
  static Scalar zero(FieldDesc f) { return Scalar(Rational(0), f); }
  static Scalar one(FieldDesc f) { return Scalar(Rational(1), f); }
  /// sqrt(d) itself; field must be quadratic.
  static Scalar root(FieldDesc f);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const FieldDesc& field() const { return field_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_one() const { return a_ == 1 && b_ == 0; }
  bool is_rational_value() const { return b_ == 0; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;
  /// Galois conjugate a - b*sqrt(d).
  Scalar conjugate() const;
  /// Field norm a^2 - d*b^2, a rational.
  Rational norm() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Reinterpret in Q(sqrt(d)); only the rational field embeds, and
  /// embedding into the same field is the identity.
  Scalar embed(FieldDesc target) const;

  std::string str() const;

 private:
  void check_same_field(const Scalar& o) const;

  Rational a_ = 0;
  Rational b_ = 0;
  FieldDesc field_;
};

/// Exact square root within the scalar's own field, if one exists.
std::optional<Scalar> is_square(const Scalar& x);

/// Exact square root of a non-negative rational, if it is a perfect square.
std::optional<Rational> rational_sqrt(const Rational& r);

/// Largest square-free s with r = s * (square); requires r != 0.
Int squarefree_part(const Int& n);

}  // namespace octic
