#include "doctest.h"

#include <random>

#include "octic/arrangement.hpp"
#include "octic/expr.hpp"

using namespace octic;

namespace {

const char* kArr2 =
    "field rational\n"
    "params\n"
    "label 2\n"
    "plane 1 0 0 0\n"
    "plane 0 1 0 0\n"
    "plane 0 0 1 0\n"
    "plane 0 0 0 1\n"
    "plane 1 1 0 0\n"
    "plane 0 1 1 0\n"
    "plane 0 0 1 1\n"
    "plane A 0 0 B\n";

const char* kArr1 =
    "field rational\n"
    "label 1\n"
    "plane 1 0 0 0\n"
    "plane 0 1 0 0\n"
    "plane 0 0 1 0\n"
    "plane 0 0 0 1\n"
    "plane 1 1 0 0\n"
    "plane 0 1 1 0\n"
    "plane 0 0 1 1\n"
    "plane 1 0 0 1\n";

// The seventy maximal minors of the worked example, in lexicographic
// quadruple order with the listing sign convention.
const char* kMinorSequence[70] = {
    "1",  "0",  "0",  "-1", "B",  "0",  "-1", "1",  "0",  "0",  "0",  "0",  "1",  "-B",
    "B",  "-1", "1",  "0",  "0",  "0",  "-1", "B",  "-1", "B",  "0",  "-1", "1",  "0",
    "1",  "0",  "0",  "-1", "B",  "-B", "B",  "1",  "0",  "0",  "-A", "0",  "1",  "-B",
    "0",  "0",  "-A", "1",  "-1", "0",  "0",  "-A", "A",  "1",  "-B", "B",  "-A", "-1",
    "0",  "A",  "0",  "A",  "0",  "-1", "B",  "-A", "A",  "1",  "-A", "A",  "-A", "A-B"};

const char* kGenericTable[24] = {"1235", "1236", "1245", "1248", "1256", "1257",
                                 "1258", "1347", "1348", "1356", "1378", "1458",
                                 "1468", "1478", "2346", "2347", "2356", "2367",
                                 "2368", "2458", "2467", "3457", "3467", "3478"};

ParamPoint rat_point(long long a, long long b) {
  return ParamPoint(Scalar::of(a), Scalar::of(b));
}

Arrangement relabel_planes(const Arrangement& arr, const Perm& sigma) {
  Arrangement out = arr;
  for (int i = 1; i <= 8; ++i)
    out.planes[static_cast<size_t>(sigma(i) - 1)] = arr.planes[static_cast<size_t>(i - 1)];
  return out;
}

}  // namespace

TEST_CASE("parsing the worked example") {
  Arrangement arr = parse_arrangement(kArr2);
  CHECK(arr.parametric);
  CHECK(arr.field.is_rational());
  CHECK(arr.label == "2");
  CHECK(arr.planes[7].param_degree == 1);
  CHECK(arr.planes[0].param_degree == 0);
}

TEST_CASE("parser error paths") {
  CHECK_THROWS_AS(parse_arrangement("field rational\nplane 0 0 0 0\n"),
                  DegeneratePlaneError);
  CHECK_THROWS_AS(parse_arrangement("field rational\nparams\nplane A 1 0 0\n"),
                  MixedRowDegree);
  CHECK_THROWS_AS(parse_arrangement("field rational\nplane s 0 0 1\n"), FieldMismatch);
  CHECK_THROWS_AS(parse_arrangement("field rational\nplane A 0 0 B\n"), ParseError);
  CHECK_THROWS_AS(parse_arrangement("field quad 4\nplane 1 0 0 0\n"), ParseError);
  std::string missing = kArr1;
  missing.resize(missing.rfind("plane"));
  CHECK_THROWS_AS(parse_arrangement(missing), ParseError);
  try {
    parse_arrangement("field rational\nplane 1 0 0 ((2\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column > 0);
  }
}

TEST_CASE("quadratic coefficients expand exactly") {
  // ((1-s)A - (1-s)^2 B) x + 4B z + 4B t over Q(sqrt(-3))
  Arrangement arr = parse_arrangement(
      "field quad -3\n"
      "params\n"
      "plane (1-s)*A-(1-s)*(1-s)*B 0 4*B 4*B\n"
      "plane 1 0 0 0\nplane 0 1 0 0\nplane 0 0 1 0\nplane 0 0 0 1\n"
      "plane 1 1 0 0\nplane 0 1 1 0\nplane 0 0 1 1\n");
  const BinForm& cx = arr.planes[0].coeff[0];
  CHECK(arr.planes[0].param_degree == 1);
  FieldDesc f3 = FieldDesc::quadratic(-3);
  CHECK(cx.coeff(0) == Scalar(Rational(1), Rational(-1), f3));
  CHECK(cx.coeff(1) == Scalar(Rational(2), Rational(2), f3));
}

TEST_CASE("the seventy minors match the listing") {
  Arrangement arr = parse_arrangement(kArr2);
  auto minors = all_minors(arr);
  REQUIRE(minors.size() == 70);
  for (int k = 0; k < 70; ++k) {
    BinForm expected = parse_form(kMinorSequence[k], arr.field, true);
    CHECK_MESSAGE(minors[static_cast<size_t>(k)].second == expected,
                  "minor ", k + 1, " (",
                  subsets::to_digits(minors[static_cast<size_t>(k)].first), "): got ",
                  minors[static_cast<size_t>(k)].second.str(), ", want ",
                  kMinorSequence[k]);
  }
}

TEST_CASE("generic and specialized incidence tables") {
  Arrangement arr = parse_arrangement(kArr2);
  IncidenceTable generic = incidence_table(arr);
  REQUIRE(generic.size() == 24);
  for (const char* quad : kGenericTable)
    CHECK(generic.contains(subsets::from_digits(quad)));

  IncidenceTable at_one = incidence_table(arr, rat_point(1, 1));
  CHECK(at_one.size() == 25);
  CHECK(at_one.contains_subset(generic));
  CHECK(at_one.contains(subsets::from_digits("5678")));

  // specialization only ever adds incidences
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> c(-9, 9);
  for (int trial = 0; trial < 10; ++trial) {
    ParamPoint p = rat_point(c(rng), 1 + std::abs(c(rng)));
    CHECK(incidence_table(arr, p).contains_subset(generic));
  }
}

TEST_CASE("coordinate tetrahedron only meets where constructed") {
  Arrangement arr = parse_arrangement(
      "field rational\n"
      "plane 1 0 0 0\nplane 0 1 0 0\nplane 0 0 1 0\nplane 0 0 0 1\n"
      "plane 1 2 3 5\nplane 7 1 4 2\nplane 3 5 1 9\nplane 2 7 5 1\n");
  CHECK(!quad_minor(arr, subsets::from_digits("1234")).is_zero());
  if (validate(arr).valid) CHECK(incidence_table(arr).empty());
}

TEST_CASE("validation verdicts") {
  CHECK(validate(parse_arrangement(kArr1)).valid);

  Arrangement arr2 = parse_arrangement(kArr2);
  ValidityVerdict at_inf = validate(arr2, ParamPoint::infinity(FieldDesc::rational()));
  CHECK(!at_inf.valid);
  bool duplicate_18 = false;
  for (const ValidityViolation& v : at_inf.violations)
    if (v.kind == ValidityViolation::Kind::DuplicatePlane &&
        v.planes == subsets::from_digits("18"))
      duplicate_18 = true;
  CHECK(duplicate_18);

  // four planes through the line x = y = 0
  Arrangement pencil = parse_arrangement(
      "field rational\n"
      "plane 1 0 0 0\nplane 0 1 0 0\nplane 1 1 0 0\nplane 1 -1 0 0\n"
      "plane 0 0 1 0\nplane 0 0 0 1\nplane 1 2 3 4\nplane 4 3 2 1\n");
  ValidityVerdict verdict = validate(pencil);
  CHECK(!verdict.valid);
  bool four_share = false;
  for (const ValidityViolation& v : verdict.violations)
    if (v.kind == ValidityViolation::Kind::FourShareLine &&
        v.planes == subsets::from_digits("1234"))
      four_share = true;
  CHECK(four_share);

  CHECK_THROWS_AS(validate(arr2), MissingParameter);
}

TEST_CASE("validation ignores plane rescaling") {
  Arrangement arr = parse_arrangement(kArr1);
  Arrangement scaled = arr;
  for (int i = 0; i < 8; ++i)
    for (BinForm& c : scaled.planes[static_cast<size_t>(i)].coeff)
      c = c.scale(Scalar::of(3 + i));
  ValidityVerdict a = validate(arr), b = validate(scaled);
  CHECK(a.valid == b.valid);
  CHECK(incidence_table(arr) == incidence_table(scaled));
}

TEST_CASE("relabeling planes relabels the table") {
  Arrangement arr = parse_arrangement(kArr1);
  IncidenceTable table = incidence_table(arr);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Perm sigma = all_s8()[rng() % all_s8().size()];
    CHECK(incidence_table(relabel_planes(arr, sigma)) == table.relabel(sigma));
  }
}

TEST_CASE("specialization extends the field when needed") {
  Arrangement arr = parse_arrangement(kArr2);
  FieldDesc q5 = FieldDesc::quadratic(5);
  ParamPoint golden(Scalar(Rational(-1, 2), Rational(1, 2), q5), Scalar::one(q5));
  Arrangement member = specialize(arr, golden);
  CHECK(member.field == q5);
  CHECK(!member.parametric);
  CHECK(incidence_table(member).contains_subset(incidence_table(arr)));
}

TEST_CASE("rendering round trip") {
  for (const char* text : {kArr1, kArr2}) {
    Arrangement arr = parse_arrangement(text);
    Arrangement again = parse_arrangement(render_arrangement(arr));
    CHECK(again.field == arr.field);
    CHECK(again.parametric == arr.parametric);
    for (int i = 0; i < 8; ++i)
      for (int c = 0; c < 4; ++c)
        CHECK(again.planes[static_cast<size_t>(i)].coeff[static_cast<size_t>(c)] ==
              arr.planes[static_cast<size_t>(i)].coeff[static_cast<size_t>(c)]);
  }
}
