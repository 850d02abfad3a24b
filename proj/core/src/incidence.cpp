#include "octic/incidence.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>

#include "octic/errors.hpp"

namespace octic {

namespace subsets {

int popcount(uint8_t m) { return std::popcount(static_cast<unsigned>(m)); }

bool tuple_less(uint8_t a, uint8_t b) {
  if (a == b) return false;
  // Walking plane labels upward, the first subset to contain a label the
  // other lacks has the smaller tuple.
  for (int i = 0; i < 8; ++i) {
    bool ina = a & (1u << i), inb = b & (1u << i);
    if (ina != inb) return ina;
  }
  return false;
}

std::string to_digits(uint8_t m) {
  std::string out;
  for (int i = 0; i < 8; ++i)
    if (m & (1u << i)) out.push_back(static_cast<char>('1' + i));
  return out;
}

uint8_t from_digits(const std::string& digits) {
  uint8_t m = 0;
  for (char c : digits) {
    if (c < '1' || c > '8') throw OcticError("bad plane label in '" + digits + "'");
    uint8_t bit = static_cast<uint8_t>(1u << (c - '1'));
    if (m & bit) throw OcticError("repeated plane label in '" + digits + "'");
    m |= bit;
  }
  return m;
}

std::vector<uint8_t> all_of_size(int k) {
  std::vector<uint8_t> out;
  for (int m = 0; m < 256; ++m)
    if (popcount(static_cast<uint8_t>(m)) == k) out.push_back(static_cast<uint8_t>(m));
  std::sort(out.begin(), out.end(), tuple_less);
  return out;
}

const std::vector<uint8_t>& all_quads() {
  static const std::vector<uint8_t> quads = all_of_size(4);
  return quads;
}

namespace {
const std::array<int, 256>& rank_table() {
  static const std::array<int, 256> table = [] {
    std::array<int, 256> t{};
    t.fill(-1);
    const auto& quads = all_quads();
    for (size_t i = 0; i < quads.size(); ++i) t[quads[i]] = static_cast<int>(i);
    return t;
  }();
  return table;
}
}  // namespace

int quad_rank(uint8_t m) {
  int r = rank_table()[m];
  if (r < 0) throw OcticError("mask is not a quadruple");
  return r;
}

uint8_t quad_of_rank(int r) { return all_quads()[static_cast<size_t>(r)]; }

}  // namespace subsets

IncidenceTable::IncidenceTable(std::vector<uint8_t> quad_masks)
    : quads_(std::move(quad_masks)) {
  for (uint8_t m : quads_)
    if (subsets::popcount(m) != 4) throw OcticError("incidence entry is not a quadruple");
  std::sort(quads_.begin(), quads_.end(), subsets::tuple_less);
  quads_.erase(std::unique(quads_.begin(), quads_.end()), quads_.end());
}

IncidenceTable IncidenceTable::from_strings(const std::vector<std::string>& quads) {
  std::vector<uint8_t> masks;
  masks.reserve(quads.size());
  for (const std::string& q : quads) masks.push_back(subsets::from_digits(q));
  return IncidenceTable(std::move(masks));
}

bool IncidenceTable::contains(uint8_t mask) const {
  auto it = std::lower_bound(quads_.begin(), quads_.end(), mask, subsets::tuple_less);
  return it != quads_.end() && *it == mask;
}

bool IncidenceTable::contains_subset(const IncidenceTable& other) const {
  for (uint8_t m : other.quads_)
    if (!contains(m)) return false;
  return true;
}

IncidenceTable IncidenceTable::relabel(const Perm& p) const {
  std::vector<uint8_t> out;
  out.reserve(quads_.size());
  for (uint8_t m : quads_) out.push_back(p.apply_mask(m));
  return IncidenceTable(std::move(out));
}

bool IncidenceTable::operator<(const IncidenceTable& o) const {
  size_t n = std::min(quads_.size(), o.quads_.size());
  for (size_t i = 0; i < n; ++i) {
    if (quads_[i] != o.quads_[i])
      return subsets::tuple_less(quads_[i], o.quads_[i]);
  }
  return quads_.size() < o.quads_.size();
}

std::string IncidenceTable::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < quads_.size(); ++i) {
    if (i) os << ", ";
    os << subsets::to_digits(quads_[i]);
  }
  return os.str();
}

DerivedIncidence derive(const IncidenceTable& table) {
  DerivedIncidence out;
  for (uint8_t t : subsets::all_of_size(3)) {
    bool all_in = true;
    for (int i = 0; i < 8 && all_in; ++i) {
      uint8_t bit = static_cast<uint8_t>(1u << i);
      if (t & bit) continue;
      if (!table.contains(static_cast<uint8_t>(t | bit))) all_in = false;
    }
    if (all_in) out.triples.push_back(t);
  }
  for (uint8_t q : subsets::all_of_size(5)) {
    bool all_in = true;
    for (int i = 0; i < 8 && all_in; ++i) {
      uint8_t bit = static_cast<uint8_t>(1u << i);
      if (!(q & bit)) continue;
      if (!table.contains(static_cast<uint8_t>(q & ~bit))) all_in = false;
    }
    if (all_in) out.quints.push_back(q);
  }
  return out;
}

Census census(const IncidenceTable& table, const DerivedIncidence& derived) {
  Census c;
  c.l3 = static_cast<int>(derived.triples.size());
  c.l2 = 28 - 3 * c.l3;
  c.lines = derived.triples;

  auto triples_inside = [&](uint8_t mask) {
    int k = 0;
    for (uint8_t t : derived.triples)
      if ((t & mask) == t) ++k;
    return k;
  };

  for (uint8_t q : derived.quints) {
    int k = triples_inside(q);
    if (k > 2) throw RelationViolation("fivefold point on more than two triple lines");
    if (k == 0) ++c.p50;
    if (k == 1) ++c.p51;
    if (k == 2) ++c.p52;
    c.points.emplace_back(q, "p5" + std::to_string(k));
  }
  for (uint8_t q : table.quads()) {
    bool in_quint = false;
    for (uint8_t quint : derived.quints)
      if ((q & quint) == q) {
        in_quint = true;
        break;
      }
    if (in_quint) continue;
    int k = triples_inside(q);
    if (k > 1) throw RelationViolation("fourfold point on more than one triple line");
    if (k == 0) ++c.p40;
    else ++c.p41;
    c.points.emplace_back(q, "p4" + std::to_string(k));
  }
  c.p3 = 0;
  for (uint8_t t : subsets::all_of_size(3)) {
    bool is_line = std::find(derived.triples.begin(), derived.triples.end(), t) !=
                   derived.triples.end();
    if (is_line) continue;
    bool in_quad = false;
    for (uint8_t q : table.quads())
      if ((t & q) == t) {
        in_quad = true;
        break;
      }
    if (!in_quad) ++c.p3;
  }

  int rel1 = c.p3 + 4 * c.p40 + 3 * c.p41 + 10 * c.p50 + 9 * c.p51 + 8 * c.p52 + c.l3;
  if (rel1 != 56)
    throw RelationViolation("counting relation p3+4p40+3p41+10p50+9p51+8p52+l3=56 fails (got " +
                            std::to_string(rel1) + ")");
  int rel2 = c.p41 + 2 * c.p51 + 4 * c.p52;
  if (rel2 != 5 * c.l3)
    throw RelationViolation("counting relation p41+2p51+4p52=5*l3 fails");
  return c;
}

int euler_characteristic(const Census& c) {
  return 40 + 4 * c.p40 + 3 * c.p41 + 16 * c.p50 + 18 * c.p51 + 20 * c.p52 + c.l3;
}

namespace {

// Ranks of a relabeled table, sorted; the working representation inside the
// canonical-form search.
void relabel_ranks(const std::vector<uint8_t>& masks, const Perm& p,
                   std::vector<uint8_t>& out) {
  out.clear();
  for (uint8_t m : masks)
    out.push_back(static_cast<uint8_t>(subsets::quad_rank(p.apply_mask(m))));
  std::sort(out.begin(), out.end());
}

}  // namespace

CanonicalForm canonical_form(const IncidenceTable& table) {
  CanonicalForm result;
  if (table.empty()) {
    result.minimal = table;
    result.witness = Perm::identity();
    return result;
  }

  // A minimizing permutation must send some incident quadruple to 1234, so
  // only |T| * 24 * 24 relabelings can attain the minimum.
  const std::vector<uint8_t>& masks = table.quads();
  std::vector<uint8_t> best;
  Perm best_perm;
  bool have_best = false;
  std::vector<uint8_t> current;
  current.reserve(masks.size());

  for (uint8_t quad : masks) {
    std::array<int, 4> in{}, out{};
    int ni = 0, no = 0;
    for (int i = 0; i < 8; ++i) {
      if (quad & (1u << i)) in[static_cast<size_t>(ni++)] = i;
      else out[static_cast<size_t>(no++)] = i;
    }
    std::array<int, 4> pi{0, 1, 2, 3};
    do {
      std::array<int, 4> po{0, 1, 2, 3};
      do {
        Perm p;
        for (int k = 0; k < 4; ++k) {
          p.one_line[static_cast<size_t>(in[static_cast<size_t>(k)])] =
              static_cast<uint8_t>(pi[static_cast<size_t>(k)] + 1);
          p.one_line[static_cast<size_t>(out[static_cast<size_t>(k)])] =
              static_cast<uint8_t>(po[static_cast<size_t>(k)] + 5);
        }
        relabel_ranks(masks, p, current);
        if (!have_best || current < best) {
          best = current;
          best_perm = p;
          have_best = true;
        } else if (current == best && p < best_perm) {
          best_perm = p;
        }
      } while (std::next_permutation(po.begin(), po.end()));
    } while (std::next_permutation(pi.begin(), pi.end()));
  }

  std::vector<uint8_t> min_masks;
  min_masks.reserve(best.size());
  for (uint8_t r : best) min_masks.push_back(subsets::quad_of_rank(r));
  result.minimal = IncidenceTable(std::move(min_masks));
  result.witness = best_perm;
  return result;
}

int generated_subgroup_order(const std::vector<Perm>& gens) {
  std::vector<Perm> elements{Perm::identity()};
  std::vector<Perm> frontier{Perm::identity()};
  auto contains = [&](const Perm& p) {
    return std::find(elements.begin(), elements.end(), p) != elements.end();
  };
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& e : frontier)
      for (const Perm& g : gens) {
        Perm c = e.then(g);
        if (!contains(c)) {
          elements.push_back(c);
          next.push_back(c);
        }
      }
    frontier = std::move(next);
  }
  return static_cast<int>(elements.size());
}

SymmetryGroup symmetry_group(const IncidenceTable& table) {
  SymmetryGroup g;
  std::array<bool, 256> present{};
  for (uint8_t m : table.quads()) present[m] = true;

  g.elements.clear();
  for (const Perm& p : all_s8()) {
    bool fixes = true;
    for (uint8_t m : table.quads()) {
      if (!present[p.apply_mask(m)]) {
        fixes = false;
        break;
      }
    }
    if (fixes) g.elements.push_back(p);
  }
  g.order = static_cast<int>(g.elements.size());

  for (const Perm& p : g.elements) ++g.element_order_profile[p.order()];

  g.abelian = true;
  for (size_t i = 0; i < g.elements.size() && g.abelian; ++i)
    for (size_t j = i + 1; j < g.elements.size(); ++j) {
      if (!(g.elements[i].then(g.elements[j]) == g.elements[j].then(g.elements[i]))) {
        g.abelian = false;
        break;
      }
    }

  // Greedy small generating set: prefer high-order elements, extend until
  // the closure fills the stabilizer.
  std::vector<Perm> pool = g.elements;
  std::sort(pool.begin(), pool.end(), [](const Perm& a, const Perm& b) {
    int oa = a.order(), ob = b.order();
    if (oa != ob) return oa > ob;
    return a < b;
  });
  std::vector<Perm> closure{Perm::identity()};
  auto in_closure = [&](const Perm& p) {
    return std::find(closure.begin(), closure.end(), p) != closure.end();
  };
  for (const Perm& cand : pool) {
    if (static_cast<int>(closure.size()) == g.order) break;
    if (cand.is_identity() || in_closure(cand)) continue;
    g.generators.push_back(cand);
    closure = {Perm::identity()};
    std::vector<Perm> frontier = closure;
    while (!frontier.empty()) {
      std::vector<Perm> next;
      for (const Perm& e : frontier)
        for (const Perm& gen : g.generators) {
          Perm c = e.then(gen);
          if (!in_closure(c)) {
            closure.push_back(c);
            next.push_back(c);
          }
        }
      frontier = std::move(next);
    }
  }

  g.name = group_profile_name(g.order, g.element_order_profile, g.abelian);
  return g;
}

}  // namespace octic
