#pragma once

#include <optional>
#include <string>
#include <vector>

#include "octic/arrangement.hpp"
#include "octic/enumerate.hpp"
#include "octic/expr.hpp"
#include "octic/family.hpp"
#include "octic/fibration.hpp"
#include "octic/incidence.hpp"

namespace octic {

struct SingularBlock {
  std::vector<uint8_t> p04, p14, p05, p15, p25;  // point label sets
  std::vector<uint8_t> l3;                       // triple lines
};

struct ExpectedSpecial {
  FieldDesc field;  // field the value lives in
  bool infinity = false;
  Scalar value;  // when finite, in `field`
  enum class Verdict { NonCY, Arr } verdict = Verdict::NonCY;
  std::string label;  // target arrangement for Verdict::Arr

  ExpectedSpecial() : value(Scalar::of(0)) {}
};

struct ExpectedFibTable {
  std::vector<PencilPoint> positions;    // column coordinates
  std::array<std::vector<int>, 2> rows;  // line counts 1..4, or 0 for '-'
};

struct CorpusEntry {
  std::string label;
  Arrangement arrangement;
  bool rigid = false;

  std::optional<IncidenceTable> minimal;
  std::optional<Perm> min_perm;
  std::optional<std::string> symmetry_name;
  std::vector<Perm> generators;
  std::optional<SingularBlock> singular;
  bool has_specials = false;
  std::vector<ExpectedSpecial> specials;
  bool has_partitions = false;
  std::vector<std::pair<uint8_t, uint8_t>> partitions;
  std::vector<ExpectedFibTable> fibtables;
  std::optional<int> h11, h12;
  std::vector<std::string> notes;
};

struct CoverAutomorphismClaim {
  std::string label;
  Perm sigma;
  std::array<std::array<BinForm, 4>, 4> matrix;
  CoverScale u_scale;
  std::optional<std::pair<BinForm, BinForm>> param_map;
};

struct GaloisClaim {
  std::string label;
  Perm sigma;
  std::array<std::array<BinForm, 4>, 4> matrix;
  std::optional<std::pair<BinForm, BinForm>> param_map;  // conjugate-family fiber map
};

class Corpus {
 public:
  /// Load every data/corpus/arr_<label>.arr (+ .exp) under `data_dir`.
  static Corpus load(const std::string& data_dir);

  const std::vector<CorpusEntry>& entries() const { return entries_; }
  const CorpusEntry* find(const std::string& label) const;
  const std::string& data_dir() const { return data_dir_; }

  /// Exact match of a canonical minimal table against the corpus.
  std::optional<LookupHit> lookup(const IncidenceTable& minimal) const;
  CanonicalLookup lookup_fn() const;

  /// Canonical form of an entry's own table (cached at load).
  const CanonicalForm& canonical_of(const std::string& label) const;

  std::vector<ParameterMapClaim> selfmap_claims() const;
  std::vector<CoverAutomorphismClaim> cover_claims() const;
  std::vector<GaloisClaim> galois_claims() const;

 private:
  std::string data_dir_;
  std::vector<CorpusEntry> entries_;
  struct CanonCache {
    std::string label;
    CanonicalForm canon;
  };
  std::vector<CanonCache> canon_;
};

/// The field-by-field regression comparison for one entry; empty `failures`
/// means the entry checks out.
struct EntryCheck {
  std::string label;
  std::vector<std::string> failures;
  std::vector<std::string> warnings;  // informational, not counted as failures
  int checks_run = 0;
  // per-category tallies: minimal, minperm, symmetry, singular, special,
  // partitions, fibtable, matching
  std::map<std::string, int> checks_by_category;
  std::map<std::string, int> failures_by_category;
};

struct CorpusCheckResult {
  std::vector<EntryCheck> entries;
  int total_checks = 0;
  int total_failures = 0;
  bool ok() const { return total_failures == 0; }
};

/// Recompute and diff every expected field of every entry in scope
/// ("rigid", "families" or "all"); entries are processed in parallel and
/// reported in label order.
CorpusCheckResult corpus_check(const Corpus& corpus, const std::string& scope,
                               int threads = 0);

/// Per-entry fibration table comparison (exposed for tests).  Full: some
/// computed partition reproduces the printed column types and the
/// cross-ratios of every column against the first three.  FourthColumn:
/// types match and the fourth-column cross-ratio is attained (the level
/// the acceptance criterion pins); None: not even that.
enum class FibTableMatch { None, FourthColumn, Full };
FibTableMatch fibtable_matches(const Arrangement& arr, const ExpectedFibTable& expected,
                               std::string* diagnostic = nullptr);

/// Deterministic parameter samples that avoid a family's special values.
std::vector<ParamPoint> generic_samples(const Arrangement& family, int count,
                                        unsigned seed = 0x0c71c);

std::string default_data_dir();

}  // namespace octic
