#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "octic/enumerate.hpp"

using namespace octic;

namespace {

uint8_t mask(const char* digits) { return subsets::from_digits(digits); }

std::vector<uint8_t> masks(std::initializer_list<const char*> list) {
  std::vector<uint8_t> out;
  for (const char* s : list) out.push_back(mask(s));
  std::sort(out.begin(), out.end(), subsets::tuple_less);
  return out;
}

// Independent canonical key: minimum over the full permutation group,
// minimizing the quadruple list and carrying the other two lists along.
CanonicalKey reference_key(const EnumState& s) {
  bool first = true;
  CanonicalKey best;
  for (const Perm& p : all_s8()) {
    CanonicalKey key;
    for (uint8_t q : s.quads) key.quads.push_back(p.apply_mask(q));
    for (uint8_t t : s.triples) key.triples.push_back(p.apply_mask(t));
    for (uint8_t q : s.quints) key.quints.push_back(p.apply_mask(q));
    std::sort(key.quads.begin(), key.quads.end(), subsets::tuple_less);
    std::sort(key.triples.begin(), key.triples.end(), subsets::tuple_less);
    std::sort(key.quints.begin(), key.quints.end(), subsets::tuple_less);
    auto quads_less = [](const std::vector<uint8_t>& a, const std::vector<uint8_t>& b) {
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                          subsets::tuple_less);
    };
    if (first || quads_less(key.quads, best.quads)) {
      best = key;
      first = false;
    }
  }
  return best;
}

const char* kArr1 =
    "field rational\nlabel 1\n"
    "plane 1 0 0 0\nplane 0 1 0 0\nplane 0 0 1 0\nplane 0 0 0 1\n"
    "plane 1 1 0 0\nplane 0 1 1 0\nplane 0 0 1 1\nplane 1 0 0 1\n";

const char* kArr238 =
    "field rational\nlabel 238\n"
    "plane 1 0 0 0\nplane 0 1 0 0\nplane 0 0 1 0\nplane 0 0 0 1\n"
    "plane 1 1 1 -1\nplane 1 1 -1 1\nplane 1 -1 1 1\nplane -1 1 1 1\n";

}  // namespace

TEST_CASE("closure forks a three-sharing pair") {
  EnumState s;
  s.quads = masks({"1234", "1235"});
  ClosureOutcome out = closure(s);
  REQUIRE(out.states.size() == 2);
  bool triple_branch = false, quint_branch = false;
  for (const EnumState& child : out.states) {
    CHECK(child.quads.size() >= s.quads.size());  // monotone
    if (child.triples == masks({"123"})) {
      triple_branch = true;
      CHECK(child.quads == masks({"1234", "1235", "1236", "1237", "1238"}));
      CHECK(child.quints.empty());
    }
    if (child.quints == masks({"12345"})) {
      quint_branch = true;
      CHECK(child.quads.size() == 5);  // the five 4-subsets of 12345
      for (uint8_t q : child.quads)
        CHECK((q & mask("12345")) == q);
      CHECK(child.triples.empty());
    }
    // idempotence
    ClosureOutcome again = closure(child);
    REQUIRE(again.states.size() == 1);
    CHECK(again.states[0].same_lists(child));
  }
  CHECK(triple_branch);
  CHECK(quint_branch);
}

TEST_CASE("closed states are fixpoints") {
  EnumState s;
  s.quads = masks({"1234", "5678"});
  ClosureOutcome out = closure(s);
  REQUIRE(out.states.size() == 1);
  CHECK(out.states[0].same_lists(s));
}

TEST_CASE("two triple lines sharing two planes always contradict") {
  EnumState s;
  s.triples = masks({"123", "124"});
  for (uint8_t t : s.triples)
    for (int i = 0; i < 8; ++i)
      if (!(t & (1u << i))) s.quads.push_back(static_cast<uint8_t>(t | (1u << i)));
  std::sort(s.quads.begin(), s.quads.end(), subsets::tuple_less);
  s.quads.erase(std::unique(s.quads.begin(), s.quads.end()), s.quads.end());
  ClosureStats stats;
  ClosureOutcome out = closure(s, &stats);
  CHECK(out.states.empty());
  REQUIRE(out.contradiction);
  CHECK(*out.contradiction == "two triple lines share two planes");
}

TEST_CASE("cardinality bounds prune") {
  EnumState s;
  // five disjoint-ish triples cannot коexist: use quints instead (max 4)
  s.quints = masks({"12345", "12678", "34678", "23568", "14567"});
  for (uint8_t q : s.quints)
    for (int i = 0; i < 8; ++i)
      if (q & (1u << i)) s.quads.push_back(static_cast<uint8_t>(q & ~(1u << i)));
  std::sort(s.quads.begin(), s.quads.end(), subsets::tuple_less);
  s.quads.erase(std::unique(s.quads.begin(), s.quads.end()), s.quads.end());
  ClosureOutcome out = closure(s);
  CHECK(out.states.empty());
}

TEST_CASE("expand from the initial state matches a brute-force oracle") {
  EnumState initial = EnumState::initial();
  std::vector<EnumState> children = expand(initial);

  // oracle: close every one-quad extension, dedup by the full-group key
  std::set<CanonicalKey> oracle;
  for (uint8_t q : subsets::all_quads()) {
    if (q == mask("1234")) continue;
    EnumState grown = initial;
    grown.quads.push_back(q);
    std::sort(grown.quads.begin(), grown.quads.end(), subsets::tuple_less);
    for (const EnumState& fix : closure(grown).states) oracle.insert(reference_key(fix));
  }
  CHECK(children.size() == oracle.size());
  for (const EnumState& child : children) {
    CanonicalKey key{child.triples, child.quads, child.quints};
    CHECK(oracle.count(reference_key(child)));
    CHECK(key == reference_key(child));  // canonicalize agrees with the oracle
  }
}

TEST_CASE("dedup soundness on relabeled duplicates") {
  std::mt19937 rng(61);
  std::vector<EnumState> pool;
  pool.push_back(EnumState::from_table(
      incidence_table(parse_arrangement(kArr1))));
  pool.push_back(EnumState::from_table(
      incidence_table(parse_arrangement(kArr238))));
  {
    EnumState s;
    s.quads = masks({"1234", "1256", "3456"});
    pool.push_back(closure(s).states.front());
  }
  for (int trial = 0; trial < 1000; ++trial) {
    const EnumState& base = pool[trial % pool.size()];
    const Perm& sigma = all_s8()[rng() % all_s8().size()];
    EnumState relabeled;
    relabeled.depth = base.depth;
    for (uint8_t q : base.quads) relabeled.quads.push_back(sigma.apply_mask(q));
    for (uint8_t t : base.triples) relabeled.triples.push_back(sigma.apply_mask(t));
    for (uint8_t q : base.quints) relabeled.quints.push_back(sigma.apply_mask(q));
    std::sort(relabeled.quads.begin(), relabeled.quads.end(), subsets::tuple_less);
    std::sort(relabeled.triples.begin(), relabeled.triples.end(), subsets::tuple_less);
    std::sort(relabeled.quints.begin(), relabeled.quints.end(), subsets::tuple_less);
    CHECK(canonical_key(relabeled) == canonical_key(base));
  }
}

TEST_CASE("depth one yields the single seed class") {
  EnumerationResult result = enumerate_classes(1);
  REQUIRE(result.classes.size() == 1);
  CHECK(result.classes[0].quads == masks({"1234"}));
  CHECK(result.classes[0].triples.empty());
  CHECK(result.classes[0].quints.empty());
  CHECK(result.per_depth == std::vector<long long>{1});
}

TEST_CASE("enumeration is deterministic across runs and thread counts") {
  EnumerationResult one = enumerate_classes(2, static_cast<size_t>(-1), 1);
  EnumerationResult again = enumerate_classes(2, static_cast<size_t>(-1), 1);
  EnumerationResult parallel = enumerate_classes(2, static_cast<size_t>(-1), 4);
  REQUIRE(one.classes.size() == again.classes.size());
  REQUIRE(one.classes.size() == parallel.classes.size());
  for (size_t i = 0; i < one.classes.size(); ++i) {
    CHECK(one.classes[i].same_lists(again.classes[i]));
    CHECK(one.classes[i].same_lists(parallel.classes[i]));
  }
  CHECK(one.per_depth == parallel.per_depth);
  CHECK(one.stats.prunes == parallel.stats.prunes);
}

TEST_CASE("class cap truncates gracefully") {
  EnumerationResult result = enumerate_classes(3, 4, 1);
  CHECK(result.truncated);
  CHECK(result.classes.size() <= 4);
}

TEST_CASE("corpus tables are closed states") {
  for (const char* text : {kArr1, kArr238}) {
    IncidenceTable table = incidence_table(parse_arrangement(text));
    EnumState s = EnumState::from_table(table);
    ClosureOutcome out = closure(s);
    REQUIRE(out.states.size() == 1);
    CHECK(out.states[0].same_lists(s));
  }
}

TEST_CASE("state formatting round trip") {
  EnumState s = EnumState::from_table(incidence_table(parse_arrangement(kArr1)));
  EnumState back = parse_state(format_state(s));
  CHECK(back.same_lists(s));
  CHECK(format_state(EnumState::initial()) == "T:{} Q:{1234} P:{}");
  CHECK_THROWS_AS(parse_state("Q:{1234}"), OcticError);
}

TEST_CASE("realization check") {
  Arrangement arr = parse_arrangement(kArr1);
  EnumState own = EnumState::from_table(incidence_table(arr));
  RealizationCheck good = verify_realization(arr, own);
  CHECK(good.ok);
  CHECK(good.extra_quads.empty());

  EnumState partial = own;
  partial.quads.erase(partial.quads.begin());  // drop one quadruple
  RealizationCheck with_extra = verify_realization(arr, partial);
  CHECK(with_extra.table_contains_quads);
  CHECK(!with_extra.extra_quads.empty());

  EnumState alien;
  alien.quads = masks({"5678", "1234", "1256", "3456"});
  RealizationCheck bad = verify_realization(arr, alien);
  CHECK(!bad.ok);
}

TEST_CASE("greedy generating subsets") {
  IncidenceTable table = incidence_table(parse_arrangement(kArr238));
  GeneratingSubset g = greedy_generating_quads(table);
  // no pair of 238's quadruples shares three planes, so nothing closes
  if (g.found) CHECK(g.quads.size() == table.size());

  IncidenceTable arr1 = incidence_table(parse_arrangement(kArr1));
  GeneratingSubset g1 = greedy_generating_quads(arr1);
  if (g1.found) {
    CHECK(g1.quads.size() < arr1.size());
    EnumState seed;
    seed.quads = g1.quads;
    bool reproduces = false;
    for (const EnumState& s : closure(seed).states)
      if (s.same_lists(EnumState::from_table(arr1))) reproduces = true;
    CHECK(reproduces);
  }
}
