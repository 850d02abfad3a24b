#include "doctest.h"

#include <random>

#include "octic/scalar.hpp"

using namespace octic;

namespace {

const FieldDesc kQ = FieldDesc::rational();
const FieldDesc kQm3 = FieldDesc::quadratic(-3);
const FieldDesc kQ5 = FieldDesc::quadratic(5);

Scalar q(long long n, long long d = 1) { return Scalar(Rational(n, d), kQ); }

Scalar quad(long long a, long long b, const FieldDesc& f) {
  return Scalar(Rational(a), Rational(b), f);
}

}  // namespace

TEST_CASE("field descriptors") {
  CHECK(kQ.is_rational());
  CHECK(!kQm3.is_rational());
  CHECK_THROWS_AS(FieldDesc::quadratic(0), OcticError);
  CHECK_THROWS_AS(FieldDesc::quadratic(1), OcticError);
  CHECK_THROWS_AS(FieldDesc::quadratic(12), OcticError);  // not square-free
  CHECK(FieldDesc::quadratic(-1).d == -1);
}

TEST_CASE("norm of a conjugate pair") {
  Scalar x = quad(1, 1, kQm3);
  Scalar y = quad(1, -1, kQm3);
  CHECK(x * y == quad(4, 0, kQm3));
}

TEST_CASE("unit inverse in Z[sqrt 5]") {
  Scalar x = quad(2, 1, kQ5);
  CHECK(x.inverse() == quad(-2, 1, kQ5));
  CHECK(x * x.inverse() == Scalar::one(kQ5));
}

TEST_CASE("conjugation product from the Galois matrix check") {
  // (sqrt(-3)-1)(-sqrt(-3)-1) = 4
  Scalar x = quad(-1, 1, kQm3);
  Scalar y = quad(-1, -1, kQm3);
  CHECK(x * y == quad(4, 0, kQm3));
}

TEST_CASE("mixed fields are a hard error") {
  CHECK_THROWS_AS(q(1) + quad(1, 0, kQ5), FieldMismatch);
  CHECK_THROWS_AS((void)(q(1) == quad(1, 0, kQ5)), FieldMismatch);
  CHECK(q(1).embed(kQ5) + quad(1, 0, kQ5) == quad(2, 0, kQ5));
  CHECK_THROWS_AS(quad(1, 1, kQm3).embed(kQ5), FieldMismatch);
}

TEST_CASE("division by zero") {
  CHECK_THROWS_AS(q(1) / q(0), DivisionByZero);
  CHECK_THROWS_AS(Scalar::zero(kQ5).inverse(), DivisionByZero);
}

TEST_CASE("exact square roots") {
  SUBCASE("rational square") {
    auto r = is_square(q(9, 4));
    REQUIRE(r);
    CHECK(*r == q(3, 2));
  }
  SUBCASE("negative rational") { CHECK(!is_square(q(-3, 2))); }
  SUBCASE("quadratic field square") {
    // 7 + 4 sqrt(3) = (2 + sqrt(3))^2
    FieldDesc q3 = FieldDesc::quadratic(3);
    auto r = is_square(Scalar(Rational(7), Rational(4), q3));
    REQUIRE(r);
    CHECK(*r * *r == Scalar(Rational(7), Rational(4), q3));
  }
  SUBCASE("non-square in its own field") {
    // 5 is a square in Q(sqrt 5) (as (sqrt5)^2) but 2 is not
    CHECK(is_square(quad(5, 0, kQ5)));
    CHECK(!is_square(quad(2, 0, kQ5)));
  }
}

TEST_CASE("inverse and conjugation properties on random scalars") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-9, 9);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 100; ++trial) {
    Scalar x(Rational(d(rng), 1 + std::abs(d(rng))), Rational(d(rng), 1 + std::abs(d(rng))),
             kQm3);
    Scalar y(Rational(d(rng)), Rational(d(rng)), kQm3);
    if (!x.is_zero()) CHECK(x * x.inverse() == Scalar::one(kQm3));
    CHECK((x + y).conjugate() == x.conjugate() + y.conjugate());
    CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
    ++checked;
  }
  CHECK(checked == 100);
}

TEST_CASE("is_square round trips") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int trial = 0; trial < 100; ++trial) {
    Scalar x(Rational(d(rng), 1 + std::abs(d(rng))), Rational(d(rng), 1 + std::abs(d(rng))),
             kQ5);
    if (auto root = is_square(x)) CHECK(*root * *root == x);
    auto root2 = is_square(x * x);
    REQUIRE(root2);
    CHECK(*root2 * *root2 == x * x);
  }
}

TEST_CASE("canonical text form") {
  CHECK(q(-3, 6).str() == "-1/2");
  CHECK(quad(0, 1, kQ5).str() == "s");
  CHECK(quad(1, -1, kQm3).str() == "1-s");
  CHECK(quad(0, -2, kQm3).str() == "-2*s");
}
