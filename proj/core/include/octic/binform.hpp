#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "octic/scalar.hpp"

namespace octic {

/// Homogeneous binary form in the parameters (A, B).  coeff(k) multiplies
/// A^(degree-k) * B^k.  The identically zero form is the distinguished
/// degree-0 form with single coefficient 0.
class BinForm {
 public:
  BinForm() : coeffs_{Scalar::zero(FieldDesc{})} {}
  explicit BinForm(Scalar c) : coeffs_{std::move(c)} {}
  BinForm(int degree, std::vector<Scalar> coeffs);

  static BinForm zero(FieldDesc f) { return BinForm(Scalar::zero(f)); }
  static BinForm constant(Scalar c) { return BinForm(std::move(c)); }
  /// The monomial A (degree 1).
  static BinForm var_a(FieldDesc f);
  /// The monomial B (degree 1).
  static BinForm var_b(FieldDesc f);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Scalar& coeff(int k) const { return coeffs_[static_cast<size_t>(k)]; }
  const FieldDesc& field() const { return coeffs_[0].field(); }
  bool is_zero() const;
  bool is_constant() const { return degree() == 0; }

  BinForm operator+(const BinForm& o) const;
  BinForm operator-(const BinForm& o) const;
  BinForm operator*(const BinForm& o) const;
  BinForm operator-() const;
  BinForm scale(const Scalar& c) const;
  bool operator==(const BinForm& o) const;
  bool operator!=(const BinForm& o) const { return !(*this == o); }

  /// Evaluate at (a : b); scalars may live in an extension of the
  /// coefficient field, in which case coefficients are embedded.
  Scalar eval(const Scalar& a, const Scalar& b) const;

  /// Substitute A -> aa*A + ab*B, B -> ba*A + bb*B.
  BinForm substitute(const BinForm& image_a, const BinForm& image_b) const;

  BinForm embed(FieldDesc target) const;
  BinForm conjugate() const;

  std::string str() const;

 private:
  std::vector<Scalar> coeffs_;  // degree+1 entries, same field
};

/// Projective parameter value (a : b), canonically b = 1, or (1 : 0) for
/// the point at infinity.
struct ParamPoint {
  Scalar a;
  Scalar b;

  ParamPoint() : a(Scalar::of(1)), b(Scalar::of(0)) {}  // placeholder: infinity
  ParamPoint(Scalar a_, Scalar b_);
  static ParamPoint infinity(FieldDesc f);
  static ParamPoint affine(Scalar value);

  bool is_infinity() const { return b.is_zero(); }
  const FieldDesc& field() const { return a.field(); }
  bool operator==(const ParamPoint& o) const { return a == o.a && b == o.b; }
  bool operator!=(const ParamPoint& o) const { return !(*this == o); }
  std::string str() const;
};

/// Evaluate a form at a parameter point (canonical representative).
Scalar eval_at(const BinForm& f, const ParamPoint& at);

/// Exact determinant of a 4x4 matrix of binary forms (cofactor expansion).
BinForm det4(const std::array<std::array<BinForm, 4>, 4>& m);

/// Exact rank of an r x 4 scalar matrix by Gaussian elimination.
int matrix_rank(const std::vector<std::array<Scalar, 4>>& rows);

/// Roots of an irreducible quadratic factor, described by its monic
/// minimal polynomial t^2 + p t + q over the base field.  When the base
/// field is rational the two roots are materialized in Q(sqrt(e)); over a
/// quadratic base field only the minimal polynomial is reported.
struct QuadraticRoot {
  Scalar p;
  Scalar q;
  Int e = 0;                  // extension discriminant core (base field Q)
  std::vector<Scalar> roots;  // the two roots in Q(sqrt(e)), possibly empty
  int multiplicity = 1;
};

struct RootReport {
  std::vector<std::pair<ParamPoint, int>> rational_roots;  // base-field roots
  std::vector<QuadraticRoot> quadratic_roots;
  std::vector<BinForm> unresolved;  // monic irreducible factors, degree >= 3
  Scalar leading;                   // unit making the factorization exact

  RootReport() : leading(Scalar::of(1)) {}
  /// leading * prod (b*A - a*B)^m * prod (A^2 + p A B + q B^2)^m * prod unresolved.
  BinForm reconstruct(FieldDesc f) const;
};

/// Factor a nonzero binary form: powers of A and B, base-field roots by
/// divisor search, quadratic factors by the quadratic formula, quartics by
/// the rational resolvent cubic.  Degree >= 3 remainders are reported
/// unresolved rather than guessed.
RootReport factor_binform(const BinForm& f);

}  // namespace octic
