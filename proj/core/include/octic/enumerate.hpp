#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "octic/arrangement.hpp"
#include "octic/incidence.hpp"

namespace octic {

/// Work-list state: chosen triple lines, incident quadruples and fivefold
/// points, all as sorted mask lists, plus the number of freely added
/// quadruples.
struct EnumState {
  std::vector<uint8_t> triples;
  std::vector<uint8_t> quads;
  std::vector<uint8_t> quints;
  int depth = 1;

  bool same_lists(const EnumState& o) const {
    return triples == o.triples && quads == o.quads && quints == o.quints;
  }
  static EnumState initial();                       // quads = {1234}
  static EnumState from_table(const IncidenceTable& table);  // with derived lists
};

struct ClosureStats {
  long long branches = 0;
  std::map<std::string, long long> prunes;

  void merge(const ClosureStats& o);
};

/// Closed, constraint-satisfying descendants of a state; when every branch
/// dies, `contradiction` carries the reason.
struct ClosureOutcome {
  std::vector<EnumState> states;
  std::optional<std::string> contradiction;
};

/// Iterate the rewrite rules to all fixpoints: a pair of quadruples sharing
/// three entries forks into the triple and quintuple interpretations unless
/// one already holds; triples pull in their five covering quadruples,
/// quintuples their five contained ones; overlap and cardinality
/// constraints prune.
ClosureOutcome closure(const EnumState& s, ClosureStats* stats = nullptr);

/// Canonical key: quadruple list minimized over relabelings, with the
/// triple and quintuple lists relabeled by the same witness.
struct CanonicalKey {
  std::vector<uint8_t> triples, quads, quints;
  bool operator==(const CanonicalKey&) const = default;
  bool operator<(const CanonicalKey& o) const;
};

CanonicalKey canonical_key(const EnumState& s);
/// The state relabeled by its minimizing witness.
EnumState canonicalize(const EnumState& s);

/// All canonical closed states obtained by adding one absent quadruple.
std::vector<EnumState> expand(const EnumState& s, ClosureStats* stats = nullptr);

struct EnumerationResult {
  std::vector<EnumState> classes;      // canonical representatives, sorted
  std::vector<long long> per_depth;    // newly seen classes per depth (1-based)
  ClosureStats stats;
  bool truncated = false;
};

/// Breadth-first enumeration from the initial state, deduplicating by
/// canonical key, up to `max_depth` free additions.
EnumerationResult enumerate_classes(int max_depth,
                                    size_t class_cap = static_cast<size_t>(-1),
                                    int threads = 1);

/// "T:{125,148} Q:{1234,1235} P:{12345}"
std::string format_state(const EnumState& s);
EnumState parse_state(const std::string& line);

struct GeneratingSubset {
  bool found = false;
  std::vector<uint8_t> quads;  // free additions whose closure rebuilds the state
};

/// Greedy search for a small quadruple set whose closure reproduces the
/// table's full state; feeds the reachability report.
GeneratingSubset greedy_generating_quads(const IncidenceTable& table);

struct RealizationCheck {
  bool ok = false;
  bool table_contains_quads = false;
  bool derived_matches = false;
  IncidenceTable table;
  std::vector<uint8_t> extra_quads;  // incidences beyond the state's list
};

/// Check a concrete arrangement against a target state: its incidence
/// table must contain the state's quadruples and derive exactly the
/// state's triples and quintuples.
RealizationCheck verify_realization(const Arrangement& arr, const EnumState& target,
                                    const std::optional<ParamPoint>& at = {});

}  // namespace octic
