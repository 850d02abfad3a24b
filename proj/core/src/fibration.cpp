#include "octic/fibration.hpp"

#include <algorithm>

#include "octic/errors.hpp"

namespace octic {

std::string PencilPoint::str() const {
  if (v.is_zero()) return "inf";
  if (u.is_zero()) return "0";
  return "(" + u.str() + ")/(" + v.str() + ")";
}

std::string kodaira_str(Kodaira k) {
  switch (k) {
    case Kodaira::I2: return "I2";
    case Kodaira::I4: return "I4";
    case Kodaira::I0star: return "I0*";
    case Kodaira::I2star: return "I2*";
  }
  return "?";
}

Kodaira kodaira_of_line_count(int n) {
  switch (n) {
    case 1: return Kodaira::I2;
    case 2: return Kodaira::I4;
    case 3: return Kodaira::I0star;
    case 4: return Kodaira::I2star;
    default: throw OcticError("fiber with " + std::to_string(n) + " lines");
  }
}

namespace {

using Vec4 = std::array<BinForm, 4>;

bool vec_zero(const Vec4& v) {
  return v[0].is_zero() && v[1].is_zero() && v[2].is_zero() && v[3].is_zero();
}

bool vec_proportional(const Vec4& a, const Vec4& b) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!(a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)] ==
            a[static_cast<size_t>(j)] * b[static_cast<size_t>(i)]))
        return false;
  return true;
}

BinForm det3(const BinForm& a, const BinForm& b, const BinForm& c,
             const BinForm& d, const BinForm& e, const BinForm& f,
             const BinForm& g, const BinForm& h, const BinForm& i) {
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

// Generalized cross product: a vector annihilated by the rows u, v, w.
Vec4 cross4(const Vec4& u, const Vec4& v, const Vec4& w) {
  Vec4 out;
  for (int j = 0; j < 4; ++j) {
    std::array<int, 3> cols{};
    int n = 0;
    for (int c = 0; c < 4; ++c)
      if (c != j) cols[static_cast<size_t>(n++)] = c;
    BinForm minor = det3(
        u[static_cast<size_t>(cols[0])], u[static_cast<size_t>(cols[1])], u[static_cast<size_t>(cols[2])],
        v[static_cast<size_t>(cols[0])], v[static_cast<size_t>(cols[1])], v[static_cast<size_t>(cols[2])],
        w[static_cast<size_t>(cols[0])], w[static_cast<size_t>(cols[1])], w[static_cast<size_t>(cols[2])]);
    out[static_cast<size_t>(j)] = (j % 2 == 1) ? -minor : minor;
  }
  return out;
}

Vec4 unit_vec(int k, FieldDesc f) {
  Vec4 out{BinForm::zero(f), BinForm::zero(f), BinForm::zero(f), BinForm::zero(f)};
  out[static_cast<size_t>(k)] = BinForm::constant(Scalar::one(f));
  return out;
}

BinForm dot(const Vec4& a, const Vec4& b) {
  BinForm acc = BinForm::zero(a[0].field());
  for (int i = 0; i < 4; ++i) {
    BinForm term = a[static_cast<size_t>(i)] * b[static_cast<size_t>(i)];
    if (term.is_zero()) continue;
    acc = acc.is_zero() ? term : acc + term;
  }
  return acc;
}

// Common point of a rank-3 quadruple of plane rows.
std::optional<Vec4> common_point(const Arrangement& arr, uint8_t quad) {
  std::array<Vec4, 4> rows;
  int n = 0;
  for (int i = 0; i < 8; ++i)
    if (quad & (1u << i)) rows[static_cast<size_t>(n++)] = arr.planes[static_cast<size_t>(i)].coeff;
  for (int skip = 3; skip >= 0; --skip) {
    std::array<const Vec4*, 3> tri{};
    int m = 0;
    for (int i = 0; i < 4; ++i)
      if (i != skip) tri[static_cast<size_t>(m++)] = &rows[static_cast<size_t>(i)];
    Vec4 p = cross4(*tri[0], *tri[1], *tri[2]);
    if (vec_zero(p)) continue;
    bool annihilated = true;
    for (int i = 0; i < 4 && annihilated; ++i)
      if (!dot(rows[static_cast<size_t>(i)], p).is_zero()) annihilated = false;
    if (annihilated) return p;
  }
  return std::nullopt;
}

}  // namespace

std::vector<KummerPartition> kummer_partitions(const Arrangement& arr) {
  IncidenceTable table = incidence_table(arr);
  std::vector<KummerPartition> out;
  for (uint8_t quad : subsets::all_quads()) {
    if (!(quad & 1u)) continue;  // enumerate by the half containing plane 1
    uint8_t comp = static_cast<uint8_t>(~quad);
    if (!table.contains(quad) || !table.contains(comp)) continue;
    auto p1 = common_point(arr, quad);
    auto p2 = common_point(arr, comp);
    if (!p1 || !p2) continue;  // a quadruple sharing a line has no single point
    KummerPartition part;
    part.first = quad;
    part.second = comp;
    part.point_first = *p1;
    part.point_second = *p2;
    out.push_back(std::move(part));
  }
  return out;
}

FiberModel fiber_model(const Arrangement& arr, const KummerPartition& part) {
  const FieldDesc f = arr.field;
  FiberModel model;
  model.partition = part;

  // Pencil basis: two independent forms vanishing at both points.
  std::vector<Vec4> basis;
  for (int k = 0; k < 4 && basis.size() < 2; ++k) {
    Vec4 g = cross4(part.point_first, part.point_second, unit_vec(k, f));
    if (vec_zero(g)) continue;
    if (basis.size() == 1 && vec_proportional(basis[0], g)) continue;
    basis.push_back(g);
  }
  if (basis.size() != 2) throw OcticError("pencil basis construction failed");
  model.pencil_g0 = basis[0];
  model.pencil_g1 = basis[1];

  for (int side = 0; side < 2; ++side) {
    FiberSide& out = model.sides[static_cast<size_t>(side)];
    out.quad = side == 0 ? part.first : part.second;
    const Vec4& apex = side == 0 ? part.point_first : part.point_second;

    std::vector<int> members;
    for (int i = 0; i < 8; ++i)
      if (out.quad & (1u << i)) members.push_back(i + 1);

    for (size_t a = 0; a < 4; ++a)
      for (size_t b = a + 1; b < 4; ++b) {
        int i = members[a], j = members[b];
        const Vec4& ri = arr.planes[static_cast<size_t>(i - 1)].coeff;
        const Vec4& rj = arr.planes[static_cast<size_t>(j - 1)].coeff;
        Vec4 p{};
        bool found = false;
        for (int k = 0; k < 4 && !found; ++k) {
          Vec4 cand = cross4(ri, rj, unit_vec(k, f));
          if (vec_zero(cand) || vec_proportional(cand, apex)) continue;
          p = cand;
          found = true;
        }
        if (!found) throw OcticError("line point construction failed");
        PencilPoint pos{dot(model.pencil_g0, p), dot(model.pencil_g1, p)};
        if (pos.is_zero_zero()) {
          // the line lies in every pencil plane, i.e. along the axis
          out.degenerate_lines.emplace_back(i, j);
          continue;
        }
        bool grouped = false;
        for (Fiber& fiber : out.fibers)
          if (fiber.position.same(pos)) {
            fiber.lines.emplace_back(i, j);
            grouped = true;
            break;
          }
        if (!grouped) out.fibers.push_back(Fiber{pos, {{i, j}}, Kodaira::I2});
      }
    for (Fiber& fiber : out.fibers)
      fiber.type = kodaira_of_line_count(static_cast<int>(fiber.lines.size()));

    // conjugate splittings {i,j} | {k,l} of the quadruple
    const auto& m = members;
    out.conjugate_pairs = {
        {std::make_pair(m[0], m[1]), std::make_pair(m[2], m[3])},
        {std::make_pair(m[0], m[2]), std::make_pair(m[1], m[3])},
        {std::make_pair(m[0], m[3]), std::make_pair(m[1], m[2])},
    };
  }
  return model;
}

FiberMatching match_fibers(const Arrangement& arr, const KummerPartition& part,
                           const FiberModel& model) {
  (void)part;
  IncidenceTable table = incidence_table(arr);
  const FiberSide& s0 = model.sides[0];
  const FiberSide& s1 = model.sides[1];
  FiberMatching out;
  std::vector<bool> used0(s0.fibers.size(), false), used1(s1.fibers.size(), false);
  for (size_t i = 0; i < s0.fibers.size(); ++i)
    for (size_t j = 0; j < s1.fibers.size(); ++j) {
      bool geometric = s0.fibers[i].position.same(s1.fibers[j].position);
      bool combinatorial = true;
      for (const auto& [a, b] : s0.fibers[i].lines)
        for (const auto& [c, d] : s1.fibers[j].lines) {
          uint8_t quad = static_cast<uint8_t>((1u << (a - 1)) | (1u << (b - 1)) |
                                              (1u << (c - 1)) | (1u << (d - 1)));
          if (!table.contains(quad)) combinatorial = false;
        }
      if (geometric != combinatorial)
        throw MatchingDisagreement(
            "geometric and combinatorial fiber matching differ at " +
            subsets::to_digits(s0.quad) + "/" + subsets::to_digits(s1.quad));
      if (geometric) {
        out.pairs.emplace_back(i, j);
        used0[i] = used1[j] = true;
      }
    }
  for (size_t i = 0; i < used0.size(); ++i)
    if (!used0[i]) out.unmatched_first.push_back(i);
  for (size_t j = 0; j < used1.size(); ++j)
    if (!used1[j]) out.unmatched_second.push_back(j);
  return out;
}

PencilPoint cross_ratio(const PencilPoint& a, const PencilPoint& b,
                        const PencilPoint& c, const PencilPoint& x) {
  // (x - b)(c - a) : (x - a)(c - b), so that a,b,c map to inf,0,1.
  BinForm num = (x.u * b.v - b.u * x.v) * (c.u * a.v - a.u * c.v);
  BinForm den = (x.u * a.v - a.u * x.v) * (c.u * b.v - b.u * c.v);
  return PencilPoint{num, den};
}

FiberModel normalize_positions(const FiberModel& model,
                               const std::array<PencilPoint, 3>& anchors) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (anchors[static_cast<size_t>(i)].same(anchors[static_cast<size_t>(j)]))
        throw CoincidentAnchors();
  FiberModel out = model;
  for (FiberSide& side : out.sides)
    for (Fiber& fiber : side.fibers)
      fiber.position = cross_ratio(anchors[0], anchors[1], anchors[2], fiber.position);
  return out;
}

}  // namespace octic
