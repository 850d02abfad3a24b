#include "doctest.h"

#include <algorithm>
#include <set>

#include "octic/corpus.hpp"
#include "octic/fibration.hpp"

using namespace octic;

namespace {

const char* kArr1 =
    "field rational\nlabel 1\n"
    "plane 1 0 0 0\nplane 0 1 0 0\nplane 0 0 1 0\nplane 0 0 0 1\n"
    "plane 1 1 0 0\nplane 0 1 1 0\nplane 0 0 1 1\nplane 1 0 0 1\n";

const char* kArr238 =
    "field rational\nlabel 238\n"
    "plane 1 0 0 0\nplane 0 1 0 0\nplane 0 0 1 0\nplane 0 0 0 1\n"
    "plane 1 1 1 -1\nplane 1 1 -1 1\nplane 1 -1 1 1\nplane -1 1 1 1\n";

const char* kArr2 =
    "field rational\nparams\nlabel 2\n"
    "plane 1 0 0 0\nplane 0 1 0 0\nplane 0 0 1 0\nplane 0 0 0 1\n"
    "plane 1 1 0 0\nplane 0 1 1 0\nplane 0 0 1 1\nplane A 0 0 B\n";

// two generic concurrent quadruples: planes 1-4 meet at (1,2,3,4),
// planes 5-8 at (5,1,7,2); no other quadruple is incident
const char* kToy =
    "field rational\n"
    "plane 12 16 -32 13\nplane -4 28 24 -31\nplane 4 0 8 -7\nplane 8 36 -12 -11\n"
    "plane 7 -5 0 -15\nplane -5 -6 -1 19\nplane 16 -10 0 -35\nplane -6 -7 1 15\n";

std::pair<uint8_t, uint8_t> pq(const char* a, const char* b) {
  return {subsets::from_digits(a), subsets::from_digits(b)};
}

std::multiset<std::string> type_multiset(const FiberSide& side) {
  std::multiset<std::string> out;
  for (const Fiber& f : side.fibers) out.insert(kodaira_str(f.type));
  return out;
}

ExpectedFibTable make_table(const FieldDesc& field,
                            std::initializer_list<const char*> positions,
                            std::initializer_list<int> row0,
                            std::initializer_list<int> row1) {
  ExpectedFibTable t;
  for (const char* p : positions) {
    if (std::string(p) == "inf")
      t.positions.push_back(
          PencilPoint{BinForm::constant(Scalar::one(field)), BinForm::zero(field)});
    else {
      FormRatio r = parse_form_ratio(p, field, true);
      t.positions.push_back(PencilPoint{r.num, r.den});
    }
  }
  t.rows[0] = row0;
  t.rows[1] = row1;
  return t;
}

}  // namespace

TEST_CASE("kummer partitions of the first arrangement") {
  Arrangement arr = parse_arrangement(kArr1);
  std::vector<KummerPartition> parts = kummer_partitions(arr);
  std::vector<std::pair<uint8_t, uint8_t>> got;
  for (const KummerPartition& p : parts) got.emplace_back(p.first, p.second);
  std::vector<std::pair<uint8_t, uint8_t>> expected = {
      pq("1256", "3478"), pq("1258", "3467"), pq("1458", "2367"), pq("1478", "2356")};
  auto cmp = [](auto a, auto b) { return subsets::tuple_less(a.first, b.first); };
  std::sort(got.begin(), got.end(), cmp);
  std::sort(expected.begin(), expected.end(), cmp);
  CHECK(got == expected);
}

TEST_CASE("kummer partitions of arrangement 238") {
  std::vector<KummerPartition> parts = kummer_partitions(parse_arrangement(kArr238));
  CHECK(parts.size() == 6);
  bool has_1256 = false, has_1467 = false;
  for (const KummerPartition& p : parts) {
    if (p.first == subsets::from_digits("1256")) has_1256 = true;
    if (p.first == subsets::from_digits("1467")) has_1467 = true;
  }
  CHECK(has_1256);
  CHECK(has_1467);
}

TEST_CASE("no partitions without incident complementary quadruples") {
  Arrangement arr = parse_arrangement(
      "field rational\n"
      "plane 1 0 0 0\nplane 0 1 0 0\nplane 0 0 1 0\nplane 0 0 0 1\n"
      "plane 1 2 3 5\nplane 7 1 4 2\nplane 3 5 1 9\nplane 2 7 5 1\n");
  CHECK(kummer_partitions(arr).empty());
}

TEST_CASE("fiber types of the triple-line partition") {
  Arrangement arr = parse_arrangement(kArr1);
  bool seen = false;
  for (const KummerPartition& p : kummer_partitions(arr)) {
    if (p.first != subsets::from_digits("1458")) continue;
    seen = true;
    FiberModel model = fiber_model(arr, p);
    for (const FiberSide& side : model.sides) {
      CHECK(type_multiset(side) == std::multiset<std::string>{"I2*", "I2", "I2"});
      int lines = 0, star_fibers = 0;
      for (const Fiber& f : side.fibers) {
        lines += static_cast<int>(f.lines.size());
        if (f.lines.size() >= 3) ++star_fibers;
      }
      CHECK(lines == 6);
      CHECK(star_fibers == 1);  // the quad contains a triple line
      CHECK(side.conjugate_pairs.size() == 3);
    }
  }
  CHECK(seen);
}

TEST_CASE("line counts always sum to six") {
  for (const char* text : {kArr1, kArr238, kArr2}) {
    Arrangement arr = parse_arrangement(text);
    for (const KummerPartition& p : kummer_partitions(arr)) {
      FiberModel model = fiber_model(arr, p);
      for (const FiberSide& side : model.sides) {
        int lines = 0;
        for (const Fiber& f : side.fibers) lines += static_cast<int>(f.lines.size());
        CHECK(lines == 6);
        CHECK(side.degenerate_lines.empty());
      }
    }
  }
}

TEST_CASE("matching agrees both ways on corpus examples") {
  for (const char* text : {kArr1, kArr238, kArr2}) {
    Arrangement arr = parse_arrangement(text);
    for (const KummerPartition& p : kummer_partitions(arr)) {
      FiberModel model = fiber_model(arr, p);
      CHECK_NOTHROW(match_fibers(arr, p, model));
    }
  }
}

TEST_CASE("toy arrangement: six distinct fibers, empty matching") {
  Arrangement arr = parse_arrangement(kToy);
  IncidenceTable table = incidence_table(arr);
  REQUIRE(table.size() == 2);  // only the two constructed quadruples
  std::vector<KummerPartition> parts = kummer_partitions(arr);
  REQUIRE(parts.size() == 1);
  FiberModel model = fiber_model(arr, parts[0]);
  for (const FiberSide& side : model.sides) {
    CHECK(side.fibers.size() == 6);
    CHECK(type_multiset(side) ==
          std::multiset<std::string>{"I2", "I2", "I2", "I2", "I2", "I2"});
  }
  FiberMatching matching = match_fibers(arr, parts[0], model);
  CHECK(matching.pairs.empty());
  CHECK(matching.unmatched_first.size() == 6);
  CHECK(matching.unmatched_second.size() == 6);
}

TEST_CASE("normalization fixes the anchors") {
  Arrangement arr = parse_arrangement(kArr238);
  std::vector<KummerPartition> parts = kummer_partitions(arr);
  FiberModel model = fiber_model(arr, parts[0]);
  FieldDesc f = arr.field;
  PencilPoint inf{BinForm::constant(Scalar::one(f)), BinForm::zero(f)};
  PencilPoint zero{BinForm::zero(f), BinForm::constant(Scalar::one(f))};
  PencilPoint one{BinForm::constant(Scalar::one(f)), BinForm::constant(Scalar::one(f))};
  CHECK(cross_ratio(inf, zero, one, inf).same(inf));
  CHECK(cross_ratio(inf, zero, one, zero).same(zero));
  CHECK(cross_ratio(inf, zero, one, one).same(one));
  PencilPoint x{BinForm::constant(Scalar::of(7)), BinForm::constant(Scalar::of(2))};
  CHECK(cross_ratio(inf, zero, one, x).same(x));
  CHECK_THROWS_AS(normalize_positions(model, {inf, inf, one}), CoincidentAnchors);
}

TEST_CASE("cross-ratio is invariant under normalization") {
  Arrangement arr = parse_arrangement(kArr238);
  std::vector<KummerPartition> parts = kummer_partitions(arr);
  FiberModel model = fiber_model(arr, parts[0]);
  std::vector<PencilPoint> positions;
  for (const Fiber& f : model.sides[0].fibers) positions.push_back(f.position);
  REQUIRE(positions.size() >= 4);
  PencilPoint before =
      cross_ratio(positions[0], positions[1], positions[2], positions[3]);
  FiberModel normalized =
      normalize_positions(model, {positions[2], positions[0], positions[3]});
  std::vector<PencilPoint> after;
  for (const Fiber& f : normalized.sides[0].fibers) after.push_back(f.position);
  CHECK(cross_ratio(after[0], after[1], after[2], after[3]).same(before));
}

TEST_CASE("printed table of arrangement 238 is reproduced") {
  Arrangement arr = parse_arrangement(kArr238);
  ExpectedFibTable table =
      make_table(arr.field, {"inf", "0", "1", "-1"}, {1, 1, 2, 2}, {1, 1, 2, 2});
  std::string diag;
  CHECK_MESSAGE(fibtable_matches(arr, table, &diag) == FibTableMatch::Full, diag);
}

TEST_CASE("printed table of the worked family is reproduced symbolically") {
  Arrangement arr = parse_arrangement(kArr2);
  ExpectedFibTable table =
      make_table(arr.field, {"inf", "0", "1", "A/B"}, {4, 1, 1, 0}, {1, 4, 0, 1});
  std::string diag;
  CHECK_MESSAGE(fibtable_matches(arr, table, &diag) == FibTableMatch::Full, diag);
}

TEST_CASE("a wrong table is rejected") {
  Arrangement arr = parse_arrangement(kArr238);
  ExpectedFibTable wrong =
      make_table(arr.field, {"inf", "0", "1", "2"}, {1, 1, 2, 2}, {1, 1, 2, 2});
  CHECK(fibtable_matches(arr, wrong, nullptr) == FibTableMatch::None);
}
