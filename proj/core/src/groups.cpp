#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "octic/errors.hpp"
#include "octic/incidence.hpp"

namespace octic {

namespace {

// Permutations on n points, the common representation for the model groups.
using PermN = std::vector<uint8_t>;

PermN identity_n(size_t n) {
  PermN p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

PermN compose(const PermN& a, const PermN& b) {  // apply a, then b
  PermN out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

PermN from_cycles_n(size_t n, const std::vector<std::vector<uint8_t>>& cycles) {
  PermN p = identity_n(n);
  for (const auto& cyc : cycles)
    for (size_t k = 0; k < cyc.size(); ++k) p[cyc[k]] = cyc[(k + 1) % cyc.size()];
  return p;
}

int order_of(const PermN& p) {
  int result = 1;
  std::vector<bool> seen(p.size(), false);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    size_t j = i;
    do {
      seen[j] = true;
      j = p[j];
      ++len;
    } while (j != i);
    result = std::lcm(result, len);
  }
  return result;
}

std::vector<PermN> close_group(size_t n, const std::vector<PermN>& gens) {
  std::vector<PermN> elements{identity_n(n)};
  std::vector<PermN> frontier = elements;
  auto contains = [&](const PermN& p) {
    return std::find(elements.begin(), elements.end(), p) != elements.end();
  };
  while (!frontier.empty()) {
    std::vector<PermN> next;
    for (const PermN& e : frontier)
      for (const PermN& g : gens) {
        PermN c = compose(e, g);
        if (!contains(c)) {
          elements.push_back(c);
          next.push_back(c);
        }
      }
    frontier = std::move(next);
  }
  return elements;
}

struct GroupModel {
  std::string name;
  int order = 1;
  std::map<int, int> profile;
  bool abelian = true;
};

GroupModel profile_of(const std::string& name, size_t n, const std::vector<PermN>& gens) {
  GroupModel m;
  m.name = name;
  std::vector<PermN> elements = close_group(n, gens);
  m.order = static_cast<int>(elements.size());
  for (const PermN& e : elements) ++m.profile[order_of(e)];
  m.abelian = true;
  for (size_t i = 0; i < elements.size() && m.abelian; ++i)
    for (size_t j = i + 1; j < elements.size(); ++j)
      if (compose(elements[i], elements[j]) != compose(elements[j], elements[i])) {
        m.abelian = false;
        break;
      }
  return m;
}

// Hol(C8) = C8 x| Aut(C8), acting on Z/8: translation and the units 3, 5.
std::vector<PermN> hol_c8_generators() {
  PermN shift(8), m3(8), m5(8);
  for (size_t x = 0; x < 8; ++x) {
    shift[x] = static_cast<uint8_t>((x + 1) % 8);
    m3[x] = static_cast<uint8_t>((3 * x) % 8);
    m5[x] = static_cast<uint8_t>((5 * x) % 8);
  }
  return {shift, m3, m5};
}

// UT(4,2) acting on F_2^4 (16 points); generated by the elementary
// transvections I+E12, I+E23, I+E34.
std::vector<PermN> ut42_generators() {
  auto transvection = [](int r, int c) {
    PermN p(16);
    for (int v = 0; v < 16; ++v) {
      int out = v;
      // bit i of v = coordinate x_(i+1); row r gains column c.
      if (v & (1 << c)) out ^= (1 << r);
      p[static_cast<size_t>(v)] = static_cast<uint8_t>(out);
    }
    return p;
  };
  return {transvection(0, 1), transvection(1, 2), transvection(2, 3)};
}

// C2 x Q8 as a 16-element multiplication table: index = c*8 + q where q
// encodes (sign, unit) with units 1, i, j, k.
struct SmallGroup {
  int n = 16;
  std::array<std::array<uint8_t, 16>, 16> mul{};
};

SmallGroup c2_times_q8() {
  // Q8: q = sign*4 + unit, units 0:1, 1:i, 2:j, 3:k.
  auto q8_mul = [](int a, int b) {
    int sa = a / 4, ua = a % 4;
    int sb = b / 4, ub = b % 4;
    static const int unit[4][4] = {
        {0, 1, 2, 3},  // 1 * x
        {1, 0, 3, 2},  // i * {1,i,j,k} units
        {2, 3, 0, 1},
        {3, 2, 1, 0}};
    static const int sign[4][4] = {
        {0, 0, 0, 0},
        {0, 1, 0, 1},  // i*i=-1, i*j=k, i*k=-j
        {0, 1, 1, 0},  // j*i=-k, j*j=-1, j*k=i
        {0, 0, 1, 1}}; // k*i=j, k*j=-i, k*k=-1
    // sign[ua][ub] is the extra sign of (unit_a * unit_b)
    int u = unit[ua][ub];
    int s = (sa + sb + sign[ua][ub]) % 2;
    return s * 4 + u;
  };
  SmallGroup g;
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b) {
      int ca = a / 8, qa = a % 8;
      int cb = b / 8, qb = b % 8;
      g.mul[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          static_cast<uint8_t>(((ca + cb) % 2) * 8 + q8_mul(qa, qb));
    }
  return g;
}

// All automorphisms of a 16-element group, as permutations of its elements.
std::vector<PermN> automorphism_group(const SmallGroup& g, const std::vector<int>& gens) {
  // Express every element as a word in the generators.
  std::vector<std::vector<int>> word(static_cast<size_t>(g.n));
  std::vector<bool> known(static_cast<size_t>(g.n), false);
  known[0] = true;  // identity assumed at index 0
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int e : frontier)
      for (int gen : gens) {
        int c = g.mul[static_cast<size_t>(e)][static_cast<size_t>(gen)];
        if (!known[static_cast<size_t>(c)]) {
          known[static_cast<size_t>(c)] = true;
          word[static_cast<size_t>(c)] = word[static_cast<size_t>(e)];
          word[static_cast<size_t>(c)].push_back(gen);
          next.push_back(c);
        }
      }
    frontier = std::move(next);
  }
  if (!std::all_of(known.begin(), known.end(), [](bool b) { return b; }))
    throw OcticError("model group generators do not generate");

  std::vector<PermN> autos;
  std::vector<int> images(gens.size());
  auto try_all = [&](auto&& self, size_t k) -> void {
    if (k == gens.size()) {
      PermN phi(static_cast<size_t>(g.n));
      for (int e = 0; e < g.n; ++e) {
        int val = 0;
        for (int w : word[static_cast<size_t>(e)]) {
          size_t gi = static_cast<size_t>(
              std::find(gens.begin(), gens.end(), w) - gens.begin());
          val = g.mul[static_cast<size_t>(val)][static_cast<size_t>(images[gi])];
        }
        phi[static_cast<size_t>(e)] = static_cast<uint8_t>(val);
      }
      std::vector<bool> hit(static_cast<size_t>(g.n), false);
      for (uint8_t v : phi) {
        if (hit[v]) return;
        hit[v] = true;
      }
      for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
          if (phi[g.mul[static_cast<size_t>(a)][static_cast<size_t>(b)]] !=
              g.mul[phi[static_cast<size_t>(a)]][phi[static_cast<size_t>(b)]])
            return;
      autos.push_back(phi);
      return;
    }
    for (int img = 0; img < g.n; ++img) {
      images[k] = img;
      self(self, k + 1);
    }
  };
  try_all(try_all, 0);
  return autos;
}

GroupModel aut_c2_q8_model() {
  SmallGroup g = c2_times_q8();
  // generators: i = (0,i) -> 1, j = (0,j) -> 2, central c = (1,1) -> 8
  std::vector<PermN> autos = automorphism_group(g, {1, 2, 8});
  GroupModel m;
  m.name = "g192_955";
  m.order = static_cast<int>(autos.size());
  for (const PermN& e : autos) ++m.profile[order_of(e)];
  m.abelian = false;
  return m;
}

const std::vector<GroupModel>& models() {
  static const std::vector<GroupModel> all = [] {
    std::vector<GroupModel> ms;
    ms.push_back(profile_of("1", 1, {}));
    ms.push_back(profile_of("C2", 2, {from_cycles_n(2, {{0, 1}})}));
    ms.push_back(profile_of("C2xC2", 4, {from_cycles_n(4, {{0, 1}}), from_cycles_n(4, {{2, 3}})}));
    ms.push_back(profile_of("C2xC2xC2", 6,
                            {from_cycles_n(6, {{0, 1}}), from_cycles_n(6, {{2, 3}}),
                             from_cycles_n(6, {{4, 5}})}));
    ms.push_back(profile_of("C4", 4, {from_cycles_n(4, {{0, 1, 2, 3}})}));
    ms.push_back(profile_of("C6", 6, {from_cycles_n(6, {{0, 1, 2, 3, 4, 5}})}));
    ms.push_back(profile_of("C8", 8, {from_cycles_n(8, {{0, 1, 2, 3, 4, 5, 6, 7}})}));
    ms.push_back(profile_of("S3", 3, {from_cycles_n(3, {{0, 1}}), from_cycles_n(3, {{0, 1, 2}})}));
    ms.push_back(profile_of("D4", 4, {from_cycles_n(4, {{0, 1, 2, 3}}), from_cycles_n(4, {{0, 2}})}));
    ms.push_back(profile_of("S4", 4, {from_cycles_n(4, {{0, 1}}), from_cycles_n(4, {{0, 1, 2, 3}})}));
    ms.push_back(profile_of(
        "D6", 6, {from_cycles_n(6, {{0, 1, 2, 3, 4, 5}}), from_cycles_n(6, {{1, 5}, {2, 4}})}));
    ms.push_back(profile_of("D4xC2", 6,
                            {from_cycles_n(6, {{0, 1, 2, 3}}), from_cycles_n(6, {{0, 2}}),
                             from_cycles_n(6, {{4, 5}})}));
    ms.push_back(profile_of("S3xC2xC2", 7,
                            {from_cycles_n(7, {{0, 1}}), from_cycles_n(7, {{0, 1, 2}}),
                             from_cycles_n(7, {{3, 4}}), from_cycles_n(7, {{5, 6}})}));
    ms.push_back(profile_of("g32_43", 8, hol_c8_generators()));
    ms.push_back(profile_of("g64_138", 16, ut42_generators()));
    ms.push_back(aut_c2_q8_model());

    // The sixteen profiles must separate the sixteen types.
    for (size_t i = 0; i < ms.size(); ++i)
      for (size_t j = i + 1; j < ms.size(); ++j)
        if (ms[i].order == ms[j].order && ms[i].profile == ms[j].profile &&
            ms[i].abelian == ms[j].abelian)
          throw OcticError("group profile collision: " + ms[i].name + " vs " + ms[j].name);
    return ms;
  }();
  return all;
}

}  // namespace

std::optional<std::string> group_profile_name(int order, const std::map<int, int>& profile,
                                              bool abelian) {
  for (const GroupModel& m : models())
    if (m.order == order && m.profile == profile && m.abelian == abelian) return m.name;
  return std::nullopt;
}

std::optional<int> named_group_order(const std::string& name) {
  for (const GroupModel& m : models())
    if (m.name == name) return m.order;
  return std::nullopt;
}

}  // namespace octic
