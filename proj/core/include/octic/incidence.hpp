#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "octic/perm.hpp"

namespace octic {

/// Subsets of {1..8} as bitmasks, ordered as ascending index tuples.
namespace subsets {

int popcount(uint8_t m);
/// Ascending-tuple lexicographic order for equal-size subsets.
bool tuple_less(uint8_t a, uint8_t b);
std::string to_digits(uint8_t m);
uint8_t from_digits(const std::string& digits);
/// The 70 quadruple masks in lexicographic tuple order.
const std::vector<uint8_t>& all_quads();
/// Lexicographic index 0..69 of a quadruple mask.
int quad_rank(uint8_t m);
uint8_t quad_of_rank(int r);
/// All k-subsets in tuple order (k = 3 and 5 used for lines and points).
std::vector<uint8_t> all_of_size(int k);

}  // namespace subsets

/// Sorted list of incident quadruples; the combinatorial invariant that
/// the rest of the library keys on.
class IncidenceTable {
 public:
  IncidenceTable() = default;
  explicit IncidenceTable(std::vector<uint8_t> quad_masks);
  static IncidenceTable from_strings(const std::vector<std::string>& quads);

  const std::vector<uint8_t>& quads() const { return quads_; }
  size_t size() const { return quads_.size(); }
  bool empty() const { return quads_.empty(); }
  bool contains(uint8_t mask) const;
  bool contains_subset(const IncidenceTable& other) const;

  IncidenceTable relabel(const Perm& p) const;

  bool operator==(const IncidenceTable& o) const { return quads_ == o.quads_; }
  bool operator!=(const IncidenceTable& o) const { return !(*this == o); }
  /// Table order: quadruples compared as ascending 4-tuples, tables as
  /// sequences; a strict prefix is smaller.
  bool operator<(const IncidenceTable& o) const;

  std::string str() const;

 private:
  std::vector<uint8_t> quads_;  // sorted by tuple order, unique
};

/// Triple lines and fivefold points determined by a table.
struct DerivedIncidence {
  std::vector<uint8_t> triples;  // 3-subsets, tuple order
  std::vector<uint8_t> quints;   // 5-subsets, tuple order
};

DerivedIncidence derive(const IncidenceTable& table);

/// Singularity counts plus the labeled point and line sets.
struct Census {
  int l2 = 28, l3 = 0, p3 = 56, p40 = 0, p41 = 0, p50 = 0, p51 = 0, p52 = 0;
  std::vector<uint8_t> lines;  // triple lines
  std::vector<std::pair<uint8_t, std::string>> points;  // mask -> "p40".."p52"
};

/// Classify points and check both counting relations; throws
/// RelationViolation when the table is not that of an octic arrangement.
Census census(const IncidenceTable& table, const DerivedIncidence& derived);

int euler_characteristic(const Census& c);

struct CanonicalForm {
  IncidenceTable minimal;
  Perm witness;  // lexicographically least one-line permutation attaining it
};

/// Minimum of the table over all relabelings of the eight planes.
CanonicalForm canonical_form(const IncidenceTable& table);

struct SymmetryGroup {
  int order = 1;
  std::vector<Perm> elements;    // full stabilizer, sorted
  std::vector<Perm> generators;  // small generating set (greedy)
  std::map<int, int> element_order_profile;  // element order -> count
  bool abelian = true;
  std::optional<std::string> name;  // from the invariant-profile dictionary
};

/// Stabilizer of the table in S8, with its invariant profile and, when the
/// profile matches a model group, its name.
SymmetryGroup symmetry_group(const IncidenceTable& table);

/// Subgroup order generated by a set of permutations.
int generated_subgroup_order(const std::vector<Perm>& gens);

/// Name lookup for a profile (order, element-order histogram, abelian).
std::optional<std::string> group_profile_name(int order,
                                              const std::map<int, int>& profile,
                                              bool abelian);
/// Order of a named model group ("C2", "D4", "g192_955", ...).
std::optional<int> named_group_order(const std::string& name);

}  // namespace octic
