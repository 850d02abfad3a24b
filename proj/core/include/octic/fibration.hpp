#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "octic/arrangement.hpp"

namespace octic {

/// Point of the pencil of planes through the axis line, as a projective
/// pair of binary forms; equality is cross-multiplied identity.
struct PencilPoint {
  BinForm u, v;
  bool same(const PencilPoint& o) const { return u * o.v == o.u * v; }
  bool is_zero_zero() const { return u.is_zero() && v.is_zero(); }
  std::string str() const;
};

/// Splitting of the eight planes into two complementary concurrent
/// quadruples ("opposite fourfold points").  `first` contains plane 1.
struct KummerPartition {
  uint8_t first = 0;
  uint8_t second = 0;
  std::array<BinForm, 4> point_first;   // common point of `first`
  std::array<BinForm, 4> point_second;  // common point of `second`
};

enum class Kodaira { I2, I4, I0star, I2star };
std::string kodaira_str(Kodaira k);
Kodaira kodaira_of_line_count(int n);

struct Fiber {
  PencilPoint position;
  std::vector<std::pair<int, int>> lines;  // plane index pairs from the quad
  Kodaira type = Kodaira::I2;
};

struct FiberSide {
  uint8_t quad = 0;
  std::vector<Fiber> fibers;
  // the three splittings {i,j} | {k,l} of the quad into conjugate lines
  std::vector<std::array<std::pair<int, int>, 2>> conjugate_pairs;
  std::vector<std::pair<int, int>> degenerate_lines;  // excluded lines
};

struct FiberModel {
  KummerPartition partition;
  std::array<FiberSide, 2> sides;
  std::array<BinForm, 4> pencil_g0, pencil_g1;  // basis of the projection pencil
};

struct FiberMatching {
  std::vector<std::pair<size_t, size_t>> pairs;  // fiber index per side
  std::vector<size_t> unmatched_first, unmatched_second;
};

/// All complementary quadruple pairs with both quadruples incident and of
/// rank exactly 3 (a genuine point each), with exact intersection points.
std::vector<KummerPartition> kummer_partitions(const Arrangement& arr);

/// Singular-fiber data of the two rational elliptic surfaces induced by a
/// partition: fiber positions in the pencil through the two points, line
/// grouping, Kodaira types, conjugate pairs.
FiberModel fiber_model(const Arrangement& arr, const KummerPartition& part);

/// Match fibers across the two sides both geometrically (equal pencil
/// position) and combinatorially (cross quadruple incident); the two
/// criteria must agree or MatchingDisagreement is thrown.
FiberMatching match_fibers(const Arrangement& arr, const KummerPartition& part,
                           const FiberModel& model);

/// Apply the Moebius transformation sending the three anchors to
/// infinity, 0, 1 to every fiber position.
FiberModel normalize_positions(const FiberModel& model,
                               const std::array<PencilPoint, 3>& anchors);

/// Cross-ratio (a,b,c,x) normalized so that a,b,c map to infinity,0,1.
PencilPoint cross_ratio(const PencilPoint& a, const PencilPoint& b,
                        const PencilPoint& c, const PencilPoint& x);

}  // namespace octic
