#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace octic {

/// Permutation of the plane labels {1..8}.
struct Perm {
  // one_line[i] = image of i+1, values in 1..8
  std::array<uint8_t, 8> one_line{1, 2, 3, 4, 5, 6, 7, 8};

  static Perm identity() { return Perm{}; }
  /// Parse disjoint-cycle notation like "(126834)(57)"; "()" or "" is the
  /// identity.  Labels are the digits 1..8; fixed points may be omitted.
  static Perm from_cycles(const std::string& text);

  uint8_t operator()(int i) const { return one_line[static_cast<size_t>(i - 1)]; }
  bool is_identity() const;
  Perm inverse() const;
  /// (a.then(b))(i) = b(a(i))
  Perm then(const Perm& b) const;
  int order() const;

  /// Image of a subset bitmask (bit i = plane i+1).
  uint8_t apply_mask(uint8_t mask) const;

  bool operator==(const Perm& o) const { return one_line == o.one_line; }
  bool operator!=(const Perm& o) const { return !(*this == o); }
  /// Lexicographic order on one-line form.
  bool operator<(const Perm& o) const { return one_line < o.one_line; }

  /// Cycle notation: fixed points omitted, cycles sorted by smallest
  /// element, each cycle rotated to start at its smallest element.
  std::string cycles() const;
};

/// All 40320 permutations in lexicographic one-line order.
const std::vector<Perm>& all_s8();

}  // namespace octic
