#include "octic/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <sstream>

#include "octic/errors.hpp"

namespace octic {

namespace {

int popcount8(uint8_t m) { return std::popcount(static_cast<unsigned>(m)); }

bool insert_sorted(std::vector<uint8_t>& list, uint8_t mask) {
  auto it = std::lower_bound(list.begin(), list.end(), mask, subsets::tuple_less);
  if (it != list.end() && *it == mask) return false;
  list.insert(it, mask);
  return true;
}

bool contains_sorted(const std::vector<uint8_t>& list, uint8_t mask) {
  auto it = std::lower_bound(list.begin(), list.end(), mask, subsets::tuple_less);
  return it != list.end() && *it == mask;
}

// First violated constraint, if any.
std::optional<std::string> violation(const EnumState& s) {
  if (s.triples.size() > 4) return "more than four triple lines";
  if (s.quints.size() > 4) return "more than four fivefold points";
  for (size_t i = 0; i < s.triples.size(); ++i)
    for (size_t j = i + 1; j < s.triples.size(); ++j)
      if (popcount8(s.triples[i] & s.triples[j]) >= 2)
        return "two triple lines share two planes";
  for (size_t i = 0; i < s.quints.size(); ++i)
    for (size_t j = i + 1; j < s.quints.size(); ++j)
      if (popcount8(s.quints[i] & s.quints[j]) >= 4)
        return "two fivefold points share four planes";
  return std::nullopt;
}

void add_triple_with_quads(EnumState& s, uint8_t triple) {
  insert_sorted(s.triples, triple);
  for (int i = 0; i < 8; ++i) {
    uint8_t bit = static_cast<uint8_t>(1u << i);
    if (triple & bit) continue;
    insert_sorted(s.quads, static_cast<uint8_t>(triple | bit));
  }
}

void add_quint_with_quads(EnumState& s, uint8_t quint) {
  insert_sorted(s.quints, quint);
  for (int i = 0; i < 8; ++i) {
    uint8_t bit = static_cast<uint8_t>(1u << i);
    if (!(quint & bit)) continue;
    insert_sorted(s.quads, static_cast<uint8_t>(quint & ~bit));
  }
}

// First pair of quadruples sharing three entries whose triple and
// quintuple interpretations are both still open.
std::optional<std::pair<uint8_t, uint8_t>> first_unresolved(const EnumState& s) {
  for (size_t i = 0; i < s.quads.size(); ++i)
    for (size_t j = i + 1; j < s.quads.size(); ++j) {
      uint8_t shared = s.quads[i] & s.quads[j];
      if (popcount8(shared) != 3) continue;
      uint8_t joined = s.quads[i] | s.quads[j];
      if (contains_sorted(s.triples, shared) || contains_sorted(s.quints, joined))
        continue;
      return std::make_pair(shared, joined);
    }
  return std::nullopt;
}

}  // namespace

EnumState EnumState::initial() {
  EnumState s;
  s.quads = {subsets::from_digits("1234")};
  s.depth = 1;
  return s;
}

EnumState EnumState::from_table(const IncidenceTable& table) {
  EnumState s;
  s.quads = table.quads();
  DerivedIncidence d = derive(table);
  s.triples = d.triples;
  s.quints = d.quints;
  s.depth = static_cast<int>(s.quads.size());
  return s;
}

void ClosureStats::merge(const ClosureStats& o) {
  branches += o.branches;
  for (const auto& [reason, count] : o.prunes) prunes[reason] += count;
}

ClosureOutcome closure(const EnumState& input, ClosureStats* stats) {
  ClosureOutcome out;
  std::optional<std::string> first_reason;
  std::vector<EnumState> stack{input};
  while (!stack.empty()) {
    EnumState s = std::move(stack.back());
    stack.pop_back();
    bool dead = false;
    while (true) {
      if (auto reason = violation(s)) {
        if (stats) ++stats->prunes[*reason];
        if (!first_reason) first_reason = reason;
        dead = true;
        break;
      }
      auto pair = first_unresolved(s);
      if (!pair) break;
      const auto& [triple, quint] = *pair;
      if (stats) ++stats->branches;
      EnumState with_quint = s;
      add_quint_with_quads(with_quint, quint);
      stack.push_back(std::move(with_quint));
      add_triple_with_quads(s, triple);
    }
    if (dead) continue;
    bool duplicate = false;
    for (const EnumState& seen : out.states)
      if (seen.same_lists(s)) {
        duplicate = true;
        break;
      }
    if (!duplicate) out.states.push_back(std::move(s));
  }
  if (out.states.empty()) out.contradiction = first_reason;
  return out;
}

bool CanonicalKey::operator<(const CanonicalKey& o) const {
  auto cmp = [](const std::vector<uint8_t>& x, const std::vector<uint8_t>& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                        subsets::tuple_less);
  };
  if (quads != o.quads) return cmp(quads, o.quads);
  if (triples != o.triples) return cmp(triples, o.triples);
  return cmp(quints, o.quints);
}

EnumState canonicalize(const EnumState& s) {
  CanonicalForm canon = canonical_form(IncidenceTable(s.quads));
  EnumState out;
  out.depth = s.depth;
  out.quads = canon.minimal.quads();
  for (uint8_t t : s.triples) out.triples.push_back(canon.witness.apply_mask(t));
  for (uint8_t q : s.quints) out.quints.push_back(canon.witness.apply_mask(q));
  std::sort(out.triples.begin(), out.triples.end(), subsets::tuple_less);
  std::sort(out.quints.begin(), out.quints.end(), subsets::tuple_less);
  return out;
}

CanonicalKey canonical_key(const EnumState& s) {
  EnumState c = canonicalize(s);
  return CanonicalKey{std::move(c.triples), std::move(c.quads), std::move(c.quints)};
}

std::vector<EnumState> expand(const EnumState& s, ClosureStats* stats) {
  std::vector<EnumState> out;
  std::vector<CanonicalKey> keys;
  for (uint8_t quad : subsets::all_quads()) {
    if (contains_sorted(s.quads, quad)) continue;
    EnumState grown = s;
    insert_sorted(grown.quads, quad);
    grown.depth = s.depth + 1;
    ClosureOutcome closed = closure(grown, stats);
    for (const EnumState& fix : closed.states) {
      EnumState canon = canonicalize(fix);
      CanonicalKey key{canon.triples, canon.quads, canon.quints};
      if (std::find(keys.begin(), keys.end(), key) != keys.end()) continue;
      keys.push_back(std::move(key));
      out.push_back(std::move(canon));
    }
  }
  std::sort(out.begin(), out.end(), [](const EnumState& a, const EnumState& b) {
    return CanonicalKey{a.triples, a.quads, a.quints} <
           CanonicalKey{b.triples, b.quads, b.quints};
  });
  return out;
}

EnumerationResult enumerate_classes(int max_depth, size_t class_cap, int threads) {
  if (max_depth < 1) throw OcticError("max_depth must be at least 1");
  EnumerationResult result;
  ClosureOutcome start = closure(EnumState::initial(), &result.stats);
  std::map<CanonicalKey, EnumState> seen;
  std::vector<EnumState> frontier;
  for (const EnumState& s : start.states) {
    EnumState canon = canonicalize(s);
    CanonicalKey key{canon.triples, canon.quads, canon.quints};
    if (seen.emplace(key, canon).second) frontier.push_back(canon);
  }
  result.per_depth.push_back(static_cast<long long>(frontier.size()));

  for (int depth = 2; depth <= max_depth && !result.truncated; ++depth) {
    int nthreads = std::max(1, threads);
    size_t per = (frontier.size() + static_cast<size_t>(nthreads) - 1) /
                 std::max<size_t>(1, static_cast<size_t>(nthreads));
    std::vector<std::future<std::pair<std::vector<EnumState>, ClosureStats>>> futures;
    for (size_t begin = 0; begin < frontier.size(); begin += per) {
      size_t end = std::min(frontier.size(), begin + per);
      futures.push_back(std::async(std::launch::async, [&frontier, begin, end] {
        std::vector<EnumState> local;
        ClosureStats stats;
        for (size_t i = begin; i < end; ++i) {
          std::vector<EnumState> children = expand(frontier[i], &stats);
          local.insert(local.end(), children.begin(), children.end());
        }
        return std::make_pair(std::move(local), std::move(stats));
      }));
    }
    std::vector<EnumState> merged;
    for (auto& fut : futures) {
      auto [local, stats] = fut.get();
      merged.insert(merged.end(), local.begin(), local.end());
      result.stats.merge(stats);
    }
    std::sort(merged.begin(), merged.end(), [](const EnumState& a, const EnumState& b) {
      return CanonicalKey{a.triples, a.quads, a.quints} <
             CanonicalKey{b.triples, b.quads, b.quints};
    });
    std::vector<EnumState> next;
    for (const EnumState& s : merged) {
      CanonicalKey key{s.triples, s.quads, s.quints};
      if (seen.count(key)) continue;
      if (seen.size() >= class_cap) {
        result.truncated = true;
        break;
      }
      seen.emplace(key, s);
      next.push_back(s);
    }
    result.per_depth.push_back(static_cast<long long>(next.size()));
    frontier = std::move(next);
  }

  for (const auto& [key, state] : seen) result.classes.push_back(state);
  return result;
}

namespace {

std::string mask_list(const std::vector<uint8_t>& masks) {
  std::string out = "{";
  for (size_t i = 0; i < masks.size(); ++i) {
    if (i) out += ",";
    out += subsets::to_digits(masks[i]);
  }
  return out + "}";
}

std::vector<uint8_t> parse_mask_list(const std::string& body, int size) {
  std::vector<uint8_t> out;
  std::string token;
  std::istringstream is(body);
  while (std::getline(is, token, ',')) {
    if (token.empty()) continue;
    uint8_t m = subsets::from_digits(token);
    if (popcount8(m) != size)
      throw OcticError("state entry '" + token + "' has wrong size");
    out.push_back(m);
  }
  std::sort(out.begin(), out.end(), subsets::tuple_less);
  return out;
}

}  // namespace

std::string format_state(const EnumState& s) {
  return "T:" + mask_list(s.triples) + " Q:" + mask_list(s.quads) +
         " P:" + mask_list(s.quints);
}

EnumState parse_state(const std::string& line) {
  auto grab = [&](char tag) {
    std::string marker = std::string(1, tag) + ":{";
    size_t at = line.find(marker);
    if (at == std::string::npos) throw OcticError("missing " + marker + " in state line");
    size_t end = line.find('}', at);
    if (end == std::string::npos) throw OcticError("unterminated state list");
    return line.substr(at + marker.size(), end - at - marker.size());
  };
  EnumState s;
  s.triples = parse_mask_list(grab('T'), 3);
  s.quads = parse_mask_list(grab('Q'), 4);
  s.quints = parse_mask_list(grab('P'), 5);
  s.depth = static_cast<int>(s.quads.size());
  return s;
}

GeneratingSubset greedy_generating_quads(const IncidenceTable& table) {
  GeneratingSubset out;
  if (table.empty()) return out;
  EnumState target = EnumState::from_table(table);
  out.quads = {table.quads().front()};
  while (out.quads.size() <= table.size()) {
    EnumState seed;
    seed.quads = out.quads;
    seed.depth = static_cast<int>(out.quads.size());
    ClosureOutcome closed = closure(seed);
    const EnumState* best = nullptr;
    for (const EnumState& s : closed.states) {
      bool inside = true;
      for (uint8_t q : s.quads)
        if (!contains_sorted(target.quads, q)) inside = false;
      for (uint8_t t : s.triples)
        if (!contains_sorted(target.triples, t)) inside = false;
      for (uint8_t p : s.quints)
        if (!contains_sorted(target.quints, p)) inside = false;
      if (!inside) continue;
      if (!best || s.quads.size() > best->quads.size()) best = &s;
    }
    if (!best) return out;  // every branch escapes the target
    if (best->quads == target.quads && best->triples == target.triples &&
        best->quints == target.quints) {
      out.found = true;
      return out;
    }
    bool extended = false;
    for (uint8_t q : target.quads)
      if (!contains_sorted(best->quads, q)) {
        out.quads.push_back(q);
        std::sort(out.quads.begin(), out.quads.end(), subsets::tuple_less);
        extended = true;
        break;
      }
    if (!extended) return out;
  }
  return out;
}

RealizationCheck verify_realization(const Arrangement& arr, const EnumState& target,
                                    const std::optional<ParamPoint>& at) {
  RealizationCheck check;
  check.table = incidence_table(arr, at);
  check.table_contains_quads = true;
  for (uint8_t q : target.quads)
    if (!check.table.contains(q)) check.table_contains_quads = false;
  DerivedIncidence d = derive(check.table);
  check.derived_matches = d.triples == target.triples && d.quints == target.quints;
  for (uint8_t q : check.table.quads())
    if (!contains_sorted(target.quads, q)) check.extra_quads.push_back(q);
  check.ok = check.table_contains_quads && check.derived_matches;
  return check;
}

}  // namespace octic
