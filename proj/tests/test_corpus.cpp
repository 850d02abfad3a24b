#include "doctest.h"

#include <filesystem>
#include <random>
#include <set>
#include <fstream>

#include "octic/corpus.hpp"
#include "octic/report.hpp"

using namespace octic;

namespace {

const Corpus& corpus() {
  static const Corpus c = Corpus::load(OCTIC_TEST_DATA_DIR);
  return c;
}

}  // namespace

TEST_CASE("corpus completeness") {
  const auto& entries = corpus().entries();
  CHECK(entries.size() == 78);
  int rigid = 0, families = 0;
  for (const CorpusEntry& e : entries) (e.rigid ? rigid : families) += 1;
  CHECK(rigid == 14);
  CHECK(families == 64);
  for (const char* label : {"1", "238", "A", "B", "C", "D", "2", "275"})
    CHECK(corpus().find(label) != nullptr);
  const CorpusEntry* d = corpus().find("D");
  REQUIRE(d);
  CHECK(d->arrangement.field == FieldDesc::quadratic(-3));
  CHECK(d->arrangement.parametric);
}

TEST_CASE("labels are ordered numerically then alphabetically") {
  const auto& entries = corpus().entries();
  CHECK(entries.front().label == "1");
  CHECK(entries.back().label == "D");
}

TEST_CASE("canonical lookup distinguishes 32 from 69") {
  const CorpusEntry* e32 = corpus().find("32");
  const CorpusEntry* e69 = corpus().find("69");
  REQUIRE(e32);
  REQUIRE(e69);
  auto hit32 = corpus().lookup(canonical_form(incidence_table(e32->arrangement)).minimal);
  auto hit69 = corpus().lookup(canonical_form(incidence_table(e69->arrangement)).minimal);
  REQUIRE(hit32);
  REQUIRE(hit69);
  CHECK(hit32->label == "32");
  CHECK(hit69->label == "69");
}

TEST_CASE("lookup of the specialized worked family") {
  const CorpusEntry* e2 = corpus().find("2");
  REQUIRE(e2);
  Arrangement member =
      specialize(e2->arrangement, ParamPoint(Scalar::of(1), Scalar::of(1)));
  auto hit = corpus().lookup(canonical_form(incidence_table(member)).minimal);
  REQUIRE(hit);
  CHECK(hit->label == "1");
  CHECK(!corpus().lookup(IncidenceTable{}));
}

TEST_CASE("claims files load") {
  auto selfmaps = corpus().selfmap_claims();
  int straight = 0, twisted = 0, annotated = 0;
  for (const ParameterMapClaim& c : selfmaps) {
    (c.printed_kind == ParameterMapClaim::Kind::Straight ? straight : twisted) += 1;
    if (c.kind != c.printed_kind) ++annotated;
  }
  CHECK(straight == 54);
  CHECK(twisted == 32);
  CHECK(annotated == 3);
  CHECK(corpus().cover_claims().size() == 6);
  CHECK(corpus().galois_claims().size() == 3);
}

TEST_CASE("round trip through the renderer") {
  for (const char* label : {"1", "2", "D", "C", "275"}) {
    const CorpusEntry* entry = corpus().find(label);
    REQUIRE(entry);
    Arrangement again = parse_arrangement(render_arrangement(entry->arrangement));
    CHECK(incidence_table(again, entry->arrangement.parametric
                                     ? std::optional<ParamPoint>(ParamPoint(
                                           Scalar::of(7), Scalar::of(3)))
                                     : std::nullopt) ==
          incidence_table(entry->arrangement, entry->arrangement.parametric
                                                  ? std::optional<ParamPoint>(ParamPoint(
                                                        Scalar::of(7), Scalar::of(3)))
                                                  : std::nullopt));
  }
}

TEST_CASE("fault injection produces a single diff") {
  namespace fs = std::filesystem;
  fs::path tmp = fs::temp_directory_path() / "octic_fault_corpus";
  fs::remove_all(tmp);
  fs::create_directories(tmp / "corpus");
  fs::create_directories(tmp / "claims");
  fs::path src = fs::path(OCTIC_TEST_DATA_DIR) / "corpus";
  for (const char* name : {"arr_238.arr", "arr_238.exp"})
    fs::copy_file(src / name, tmp / "corpus" / name);
  // remove one quadruple from the expected minimal table
  {
    std::ifstream in(tmp / "corpus" / "arr_238.exp");
    std::string text((std::istreambuf_iterator<char>(in)), {});
    in.close();
    auto at = text.find(" 5678\nminperm");
    REQUIRE(at != std::string::npos);
    text.erase(at, 5);
    std::ofstream out(tmp / "corpus" / "arr_238.exp");
    out << text;
  }
  Corpus faulty = Corpus::load(tmp.string());
  CorpusCheckResult result = corpus_check(faulty, "all", 1);
  REQUIRE(result.entries.size() == 1);
  CHECK(result.total_failures == 1);
  CHECK(result.entries[0].failures.size() == 1);
  CHECK(result.entries[0].failures[0].find("minimal") != std::string::npos);
  fs::remove_all(tmp);
}

TEST_CASE("report builds and renders deterministically") {
  const CorpusEntry* entry = corpus().find("2");
  REQUIRE(entry);
  Report r1 = build_report(entry->arrangement, &corpus());
  Report r2 = build_report(entry->arrangement, &corpus());
  CHECK(render_report_text(r1) == render_report_text(r2));
  std::string text = render_report_text(r1);
  CHECK(text.find("minimal incidences") != std::string::npos);
  CHECK(text.find("euler characteristic: 136") != std::string::npos);
  CHECK(text.find("Arr 1") != std::string::npos);  // special value verdict
  REQUIRE(r1.h12);
  CHECK(*r1.h12 == 1);
}

TEST_CASE("the two specialization code paths agree") {
  for (const char* label : {"2", "13", "251", "D"}) {
    const CorpusEntry* entry = corpus().find(label);
    REQUIRE(entry);
    for (auto [p, q] : {std::make_pair(4, 1), std::make_pair(-3, 2)}) {
      ParamPoint t(Scalar::of(p), Scalar::of(q));
      IncidenceTable direct = incidence_table(entry->arrangement, t);
      IncidenceTable via_member = incidence_table(specialize(entry->arrangement, t));
      CHECK(direct == via_member);
    }
  }
}

TEST_CASE("side configurations stay within the six fiber patterns") {
  const std::set<std::multiset<int>> allowed = {
      {3, 3},           {2, 2, 1, 1},    {3, 1, 1, 1},
      {4, 1, 1},        {2, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}};
  for (const CorpusEntry& entry : corpus().entries()) {
    if (!entry.has_partitions || entry.partitions.empty()) continue;
    for (const KummerPartition& part : kummer_partitions(entry.arrangement)) {
      FiberModel model = fiber_model(entry.arrangement, part);
      for (const FiberSide& side : model.sides) {
        std::multiset<int> counts;
        for (const Fiber& f : side.fibers) counts.insert(static_cast<int>(f.lines.size()));
        CHECK_MESSAGE(allowed.count(counts) == 1, "Arr. ", entry.label);
      }
    }
  }
}

TEST_CASE("relabeling equivariance across the corpus") {
  std::mt19937 rng(137);
  for (const CorpusEntry& entry : corpus().entries()) {
    IncidenceTable table = incidence_table(entry.arrangement);
    CanonicalForm canon = canonical_form(table);
    for (int trial = 0; trial < 20; ++trial) {
      const Perm& sigma = all_s8()[rng() % all_s8().size()];
      // permuting the planes permutes the table the same way
      Arrangement relabeled = entry.arrangement;
      for (int i = 1; i <= 8; ++i)
        relabeled.planes[static_cast<size_t>(sigma(i) - 1)] =
            entry.arrangement.planes[static_cast<size_t>(i - 1)];
      IncidenceTable moved = table.relabel(sigma);
      if (trial < 4)  // recomputing minors is the expensive half
        CHECK(incidence_table(relabeled) == moved);
      // and the canonical form does not move
      CanonicalForm again = canonical_form(moved);
      CHECK(again.minimal == canon.minimal);
      CHECK(moved.relabel(again.witness) == again.minimal);
    }
  }
}
