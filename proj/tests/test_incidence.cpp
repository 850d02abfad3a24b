#include "doctest.h"

#include <algorithm>
#include <random>

#include "octic/arrangement.hpp"
#include "octic/incidence.hpp"

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

IncidenceTable masks(std::initializer_list<const char*> quads) {
  std::vector<std::string> qs(quads.begin(), quads.end());
  return IncidenceTable::from_strings(qs);
}

std::vector<uint8_t> mask_set(std::initializer_list<const char*> subsets_list) {
  std::vector<uint8_t> out;
  for (const char* s : subsets_list) out.push_back(subsets::from_digits(s));
  std::sort(out.begin(), out.end(), subsets::tuple_less);
  return out;
}

const IncidenceTable& arr1_table() {
  static const IncidenceTable table = incidence_table(parse_arrangement(kArr1));
  return table;
}

}  // namespace

TEST_CASE("subset utilities") {
  CHECK(subsets::all_quads().size() == 70);
  CHECK(subsets::quad_rank(subsets::from_digits("1234")) == 0);
  CHECK(subsets::quad_rank(subsets::from_digits("1238")) == 4);
  CHECK(subsets::quad_rank(subsets::from_digits("5678")) == 69);
  CHECK(subsets::to_digits(subsets::from_digits("2467")) == "2467");
  CHECK(subsets::tuple_less(subsets::from_digits("1678"), subsets::from_digits("2345")));
  CHECK(!subsets::tuple_less(subsets::from_digits("2345"), subsets::from_digits("1678")));
}

TEST_CASE("cycle notation") {
  Perm p = Perm::from_cycles("(126834)(57)");
  CHECK(p(1) == 2);
  CHECK(p(4) == 1);
  CHECK(p(5) == 7);
  CHECK(p.cycles() == "(126834)(57)");
  CHECK(Perm::identity().cycles() == "()");
  CHECK(Perm::from_cycles("()") == Perm::identity());
  CHECK(Perm::from_cycles("(12)(34)").inverse() == Perm::from_cycles("(12)(34)"));
  CHECK(Perm::from_cycles("(123)").inverse() == Perm::from_cycles("(132)"));
  CHECK(Perm::from_cycles("(123)").order() == 3);
  CHECK(Perm::from_cycles("(12)(345678)").order() == 6);
  CHECK_THROWS_AS(Perm::from_cycles("(119)"), OcticError);
  CHECK_THROWS_AS(Perm::from_cycles("(12"), OcticError);
}

TEST_CASE("derived incidences of the first arrangement") {
  DerivedIncidence d = derive(arr1_table());
  CHECK(d.triples == mask_set({"125", "148", "236", "347"}));
  CHECK(d.quints == mask_set({"12356", "12458", "13478", "23467"}));
}

TEST_CASE("derived incidences of trivial tables") {
  DerivedIncidence empty = derive(IncidenceTable{});
  CHECK(empty.triples.empty());
  CHECK(empty.quints.empty());

  IncidenceTable full(subsets::all_quads());
  DerivedIncidence all = derive(full);
  CHECK(all.triples.size() == 56);
  CHECK(all.quints.size() == 56);
}

TEST_CASE("census of the first arrangement") {
  Census c = census(arr1_table(), derive(arr1_table()));
  CHECK(c.p40 == 1);
  CHECK(c.p41 == 4);
  CHECK(c.p50 == 0);
  CHECK(c.p51 == 0);
  CHECK(c.p52 == 4);
  CHECK(c.l3 == 4);
  CHECK(c.p3 == 4);
  CHECK(c.l2 == 28 - 3 * 4);
  std::vector<uint8_t> p41;
  for (const auto& [mask, type] : c.points)
    if (type == "p41") p41.push_back(mask);
  std::sort(p41.begin(), p41.end(), subsets::tuple_less);
  CHECK(p41 == mask_set({"1257", "1468", "2368", "3457"}));
  CHECK(euler_characteristic(c) == 140);
}

TEST_CASE("census of arrangement 238") {
  IncidenceTable table = incidence_table(parse_arrangement(kArr238));
  CHECK(table.size() == 12);
  Census c = census(table, derive(table));
  CHECK(c.p40 == 12);
  CHECK(c.p41 + c.p50 + c.p51 + c.p52 + c.l3 == 0);
  CHECK(c.p3 == 8);
  CHECK(euler_characteristic(c) == 88);
}

TEST_CASE("census of the empty table") {
  Census c = census(IncidenceTable{}, derive(IncidenceTable{}));
  CHECK(c.p3 == 56);
  CHECK(c.l2 == 28);
  CHECK(c.p40 + c.p41 + c.p50 + c.p51 + c.p52 + c.l3 == 0);
  CHECK(euler_characteristic(c) == 40);
}

TEST_CASE("census rejects two triple lines sharing two planes") {
  // all quadruples over 123 and over 124
  std::vector<uint8_t> quads;
  for (const char* t : {"123", "124"}) {
    uint8_t triple = subsets::from_digits(t);
    for (int i = 0; i < 8; ++i)
      if (!(triple & (1u << i))) quads.push_back(static_cast<uint8_t>(triple | (1u << i)));
  }
  IncidenceTable table((std::vector<uint8_t>(quads)));
  CHECK_THROWS_AS(census(table, derive(table)), RelationViolation);
}

TEST_CASE("canonical form of the worked example") {
  IncidenceTable generic = incidence_table(parse_arrangement(kArr2));
  CanonicalForm canon = canonical_form(generic);
  IncidenceTable expected = masks({"1234", "1235", "1236", "1237", "1238", "1245",
                                   "1267", "1345", "1367", "1456", "1457", "1458",
                                   "1468", "1568", "2345", "2367", "2467", "2468",
                                   "2478", "2567", "2678", "3468", "4568", "4678"});
  CHECK(canon.minimal == expected);
  // the printed minimizing permutation attains the same minimum
  CHECK(generic.relabel(Perm::from_cycles("(126834)(57)")) == expected);
  // witness correctness
  CHECK(generic.relabel(canon.witness) == canon.minimal);
}

TEST_CASE("canonical form of arrangement 238") {
  IncidenceTable table = incidence_table(parse_arrangement(kArr238));
  CanonicalForm canon = canonical_form(table);
  CHECK(canon.minimal == masks({"1234", "1256", "1278", "1357", "1368", "1458",
                                "2367", "2457", "2468", "3456", "3478", "5678"}));
  CHECK(table.relabel(Perm::from_cycles("(172)(346)")) == canon.minimal);
}

TEST_CASE("canonical form is idempotent and relabel-invariant") {
  IncidenceTable table = arr1_table();
  CanonicalForm canon = canonical_form(table);
  CHECK(canonical_form(canon.minimal).minimal == canon.minimal);
  CHECK(canonical_form(canon.minimal).witness == Perm::identity());
  std::mt19937 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    Perm sigma = all_s8()[rng() % all_s8().size()];
    CanonicalForm again = canonical_form(table.relabel(sigma));
    CHECK(again.minimal == canon.minimal);
    CHECK(table.relabel(sigma).relabel(again.witness) == canon.minimal);
  }
  CanonicalForm empty = canonical_form(IncidenceTable{});
  CHECK(empty.minimal.empty());
  CHECK(empty.witness == Perm::identity());
}

TEST_CASE("stabilizer of the first arrangement") {
  SymmetryGroup g = symmetry_group(arr1_table());
  CHECK(g.order == 8);
  REQUIRE(g.name);
  CHECK(*g.name == "D4");
  for (const char* gen : {"(1432)(5876)", "(12)(34)(68)"})
    CHECK(arr1_table().relabel(Perm::from_cycles(gen)) == arr1_table());
  // closure under composition and inverse; Lagrange
  for (const Perm& a : g.elements) {
    CHECK(std::find(g.elements.begin(), g.elements.end(), a.inverse()) !=
          g.elements.end());
    for (const Perm& b : g.elements)
      CHECK(std::find(g.elements.begin(), g.elements.end(), a.then(b)) !=
            g.elements.end());
  }
  CHECK(40320 % g.order == 0);
  CHECK(generated_subgroup_order(g.generators) == g.order);
}

TEST_CASE("stabilizer of arrangement 238") {
  IncidenceTable table = incidence_table(parse_arrangement(kArr238));
  SymmetryGroup g = symmetry_group(table);
  CHECK(g.order == 192);
  REQUIRE(g.name);
  CHECK(*g.name == "g192_955");
  for (const char* gen : {"(23)(5687)", "(1835)(2746)"})
    CHECK(table.relabel(Perm::from_cycles(gen)) == table);
  CHECK(generated_subgroup_order({Perm::from_cycles("(23)(5687)"),
                                  Perm::from_cycles("(1835)(2746)")}) == 192);
}

TEST_CASE("group dictionary knows all sixteen types") {
  const std::pair<const char*, int> names[] = {
      {"1", 1},         {"C2", 2},      {"C2xC2", 4},    {"C2xC2xC2", 8},
      {"C4", 4},        {"C6", 6},      {"C8", 8},       {"S3", 6},
      {"D4", 8},        {"S4", 24},     {"D6", 12},      {"D4xC2", 16},
      {"S3xC2xC2", 24}, {"g32_43", 32}, {"g64_138", 64}, {"g192_955", 192}};
  for (const auto& [name, order] : names) {
    auto got = named_group_order(name);
    REQUIRE_MESSAGE(got, name);
    CHECK_MESSAGE(*got == order, name);
  }
  CHECK(!named_group_order("E8"));
}
