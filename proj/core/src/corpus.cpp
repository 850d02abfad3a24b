#include "octic/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <random>
#include <sstream>
#include <thread>

#include "octic/errors.hpp"

#ifndef OCTIC_DEFAULT_DATA_DIR
#define OCTIC_DEFAULT_DATA_DIR ""
#endif

namespace octic {

namespace fs = std::filesystem;

std::string default_data_dir() {
  if (const char* env = std::getenv("OCTIC_DATA_DIR")) return env;
  return OCTIC_DEFAULT_DATA_DIR;
}

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw OcticError("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

bool label_less(const std::string& a, const std::string& b) {
  bool na = std::isdigit(static_cast<unsigned char>(a[0]));
  bool nb = std::isdigit(static_cast<unsigned char>(b[0]));
  if (na != nb) return na;  // numeric labels before letter labels
  if (na && nb) {
    long x = std::stol(a), y = std::stol(b);
    if (x != y) return x < y;
  }
  return a < b;
}

// Split on a separator that never occurs inside expressions.
std::vector<std::string> split_on(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

PencilPoint parse_position(const std::string& text, const FieldDesc& field) {
  if (text == "inf")
    return PencilPoint{BinForm::constant(Scalar::one(field)), BinForm::zero(field)};
  FormRatio r = parse_form_ratio(text, field, true);
  return PencilPoint{r.num, r.den};
}

void parse_expected(CorpusEntry& entry, const std::string& text) {
  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  auto masks_of = [](const std::vector<std::string>& toks, size_t from) {
    std::vector<uint8_t> out;
    for (size_t i = from; i < toks.size(); ++i)
      out.push_back(subsets::from_digits(toks[i]));
    std::sort(out.begin(), out.end(), subsets::tuple_less);
    return out;
  };
  while (std::getline(is, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::vector<std::string> toks = split_ws(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    try {
      if (kw == "minimal") {
        entry.minimal = IncidenceTable(masks_of(toks, 1));
      } else if (kw == "minperm") {
        entry.min_perm = Perm::from_cycles(toks.at(1));
      } else if (kw == "symmetry") {
        entry.symmetry_name = toks.at(1);
      } else if (kw == "generators") {
        for (size_t i = 1; i < toks.size(); ++i) {
          Perm g = Perm::from_cycles(toks[i]);
          if (std::find(entry.generators.begin(), entry.generators.end(), g) ==
              entry.generators.end())
            entry.generators.push_back(g);
        }
      } else if (kw == "p04" || kw == "p14" || kw == "p05" || kw == "p15" ||
                 kw == "p25" || kw == "l3") {
        if (!entry.singular) entry.singular = SingularBlock{};
        std::vector<uint8_t> masks = masks_of(toks, 1);
        if (kw == "p04") entry.singular->p04 = masks;
        if (kw == "p14") entry.singular->p14 = masks;
        if (kw == "p05") entry.singular->p05 = masks;
        if (kw == "p15") entry.singular->p15 = masks;
        if (kw == "p25") entry.singular->p25 = masks;
        if (kw == "l3") entry.singular->l3 = masks;
      } else if (kw == "singular" && toks.size() > 1 && toks[1] == "none") {
        entry.singular = SingularBlock{};
      } else if (kw == "special") {
        entry.has_specials = true;
        ExpectedSpecial sp;
        FieldDesc f = FieldDesc::rational();
        // optional trailing "field <e>"
        size_t n = toks.size();
        if (n >= 4 && toks[n - 2] == "field") {
          f = FieldDesc::quadratic(Int(toks[n - 1]));
          n -= 2;
        }
        sp.field = f;
        if (toks.at(1) == "inf") {
          sp.infinity = true;
          sp.value = Scalar::zero(f);
        } else {
          FormRatio r = parse_form_ratio(toks.at(1), f, false);
          BinForm v = r.as_form();
          sp.value = v.coeff(0);
        }
        if (toks.at(2) == "non-cy") {
          sp.verdict = ExpectedSpecial::Verdict::NonCY;
        } else if (toks.at(2) == "arr" && n >= 4) {
          sp.verdict = ExpectedSpecial::Verdict::Arr;
          sp.label = toks.at(3);
        } else {
          throw OcticError("bad special verdict");
        }
        entry.specials.push_back(std::move(sp));
      } else if (kw == "partitions" && toks.size() > 1 && toks[1] == "none") {
        entry.has_partitions = true;
      } else if (kw == "partition") {
        entry.has_partitions = true;
        uint8_t a = subsets::from_digits(toks.at(1));
        uint8_t b = subsets::from_digits(toks.at(2));
        if (static_cast<uint8_t>(a | b) != 0xFF)
          throw OcticError("partition halves are not complementary");
        if (!(a & 1u)) std::swap(a, b);
        entry.partitions.emplace_back(a, b);
      } else if (kw == "fibtable") {
        std::string rest = line.substr(line.find("fibtable") + 8);
        std::vector<std::string> parts = split_on(rest, ';');
        if (parts.size() != 3) throw OcticError("fibtable needs 3 sections");
        ExpectedFibTable table;
        for (const std::string& tok : split_ws(parts[0]))
          table.positions.push_back(parse_position(tok, entry.arrangement.field));
        for (int r = 0; r < 2; ++r) {
          for (const std::string& tok : split_ws(parts[static_cast<size_t>(r + 1)])) {
            if (tok == "-") table.rows[static_cast<size_t>(r)].push_back(0);
            else table.rows[static_cast<size_t>(r)].push_back(std::stoi(tok));
          }
          if (table.rows[static_cast<size_t>(r)].size() != table.positions.size())
            throw OcticError("fibtable row length mismatch");
        }
        int sum0 = 0, sum1 = 0;
        for (int v : table.rows[0]) sum0 += v;
        for (int v : table.rows[1]) sum1 += v;
        if (sum0 != 6 || sum1 != 6)
          throw OcticError("fibtable rows must account for six lines each");
        entry.fibtables.push_back(std::move(table));
      } else if (kw == "h11") {
        entry.h11 = std::stoi(toks.at(1));
      } else if (kw == "h12") {
        entry.h12 = std::stoi(toks.at(1));
      } else if (kw == "note") {
        entry.notes.push_back(strip(line.substr(line.find("note") + 4)));
      } else {
        throw OcticError("unknown keyword '" + kw + "'");
      }
    } catch (const std::exception& e) {
      throw OcticError("expected-data for " + entry.label + " line " +
                       std::to_string(lineno) + ": " + e.what());
    }
  }
}

std::array<std::array<BinForm, 4>, 4> parse_matrix(
    const std::vector<std::string>& rows, const FieldDesc& field, bool params) {
  std::array<std::array<BinForm, 4>, 4> m;
  for (int r = 0; r < 4; ++r) {
    std::vector<std::string> toks = split_ws(rows[static_cast<size_t>(r)]);
    if (toks.size() != 4) throw OcticError("matrix row needs 4 entries");
    for (int c = 0; c < 4; ++c)
      m[static_cast<size_t>(r)][static_cast<size_t>(c)] =
          parse_form(toks[static_cast<size_t>(c)], field, params);
  }
  return m;
}

}  // namespace

Corpus Corpus::load(const std::string& data_dir) {
  Corpus corpus;
  corpus.data_dir_ = data_dir;
  fs::path dir = fs::path(data_dir) / "corpus";
  if (!fs::is_directory(dir)) throw OcticError("no corpus directory at " + dir.string());
  std::vector<std::string> labels;
  for (const auto& file : fs::directory_iterator(dir)) {
    const fs::path& p = file.path();
    if (p.extension() != ".arr") continue;
    std::string stem = p.stem().string();
    if (stem.rfind("arr_", 0) != 0) continue;
    labels.push_back(stem.substr(4));
  }
  std::sort(labels.begin(), labels.end(), label_less);
  for (const std::string& label : labels) {
    CorpusEntry entry;
    entry.label = label;
    entry.arrangement = parse_arrangement(read_file(dir / ("arr_" + label + ".arr")));
    entry.rigid = !entry.arrangement.parametric;
    fs::path exp = dir / ("arr_" + label + ".exp");
    if (fs::exists(exp)) parse_expected(entry, read_file(exp));
    corpus.entries_.push_back(std::move(entry));
  }
  for (const CorpusEntry& entry : corpus.entries_) {
    CanonCache cache;
    cache.label = entry.label;
    cache.canon = canonical_form(incidence_table(entry.arrangement));
    corpus.canon_.push_back(std::move(cache));
  }
  return corpus;
}

const CorpusEntry* Corpus::find(const std::string& label) const {
  for (const CorpusEntry& e : entries_)
    if (e.label == label) return &e;
  return nullptr;
}

const CanonicalForm& Corpus::canonical_of(const std::string& label) const {
  for (const CanonCache& c : canon_)
    if (c.label == label) return c.canon;
  throw OcticError("no corpus entry " + label);
}

std::optional<LookupHit> Corpus::lookup(const IncidenceTable& minimal) const {
  for (const CanonCache& c : canon_)
    if (c.canon.minimal == minimal) return LookupHit{c.label, c.canon.witness};
  return std::nullopt;
}

CanonicalLookup Corpus::lookup_fn() const {
  return [this](const IncidenceTable& minimal) { return lookup(minimal); };
}

std::vector<ParameterMapClaim> Corpus::selfmap_claims() const {
  std::vector<ParameterMapClaim> out;
  for (const auto& [file, kind] :
       {std::make_pair("selfmaps_straight.txt", ParameterMapClaim::Kind::Straight),
        std::make_pair("selfmaps_twisted.txt", ParameterMapClaim::Kind::Twisted)}) {
    fs::path path = fs::path(data_dir_) / "claims" / file;
    std::istringstream is(read_file(path));
    std::string raw;
    while (std::getline(is, raw)) {
      std::string line = raw;
      if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      std::vector<std::string> toks = split_ws(line);
      if (toks.empty()) continue;
      if (toks.size() != 2 && toks.size() != 3)
        throw OcticError("bad self-map claim: " + raw);
      ParameterMapClaim claim;
      claim.label = toks[0];
      claim.kind = kind;
      claim.printed_kind = kind;
      if (toks.size() == 3) {
        if (toks[2] == "computed=straight") claim.kind = ParameterMapClaim::Kind::Straight;
        else if (toks[2] == "computed=twisted") claim.kind = ParameterMapClaim::Kind::Twisted;
        else throw OcticError("bad self-map annotation: " + raw);
      }
      std::vector<std::string> images = split_on(toks[1], ',');
      if (images.size() != 2) throw OcticError("bad self-map image: " + raw);
      FieldDesc f = FieldDesc::rational();
      claim.image_a = parse_form(images[0], f, true);
      claim.image_b = parse_form(images[1], f, true);
      if (claim.image_a.degree() != 1 || claim.image_b.degree() != 1)
        throw OcticError("self-map images must be linear: " + raw);
      // invertibility of the parameter transformation
      Scalar det = claim.image_a.coeff(0) * claim.image_b.coeff(1) -
                   claim.image_a.coeff(1) * claim.image_b.coeff(0);
      if (det.is_zero()) throw OcticError("self-map is singular: " + raw);
      out.push_back(std::move(claim));
    }
  }
  return out;
}

std::vector<CoverAutomorphismClaim> Corpus::cover_claims() const {
  std::vector<CoverAutomorphismClaim> out;
  fs::path path = fs::path(data_dir_) / "claims" / "cover_automorphisms.txt";
  std::istringstream is(read_file(path));
  std::string raw;
  while (std::getline(is, raw)) {
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (strip(line).empty()) continue;
    std::vector<std::string> parts = split_on(line, ';');
    for (std::string& p : parts) p = strip(p);
    if (parts.size() < 8) throw OcticError("bad cover-automorphism claim: " + raw);
    CoverAutomorphismClaim claim;
    claim.label = parts[0];
    claim.sigma = Perm::from_cycles(parts[1]);
    const CorpusEntry* entry = find(claim.label);
    if (!entry) throw OcticError("cover claim for unknown entry " + claim.label);
    FieldDesc f = entry->arrangement.field;
    bool params = entry->arrangement.parametric;
    claim.matrix = parse_matrix({parts[2], parts[3], parts[4], parts[5]}, f, params);
    claim.u_scale.form = parse_form(parts[6], f, params);
    if (parts[7] == "imag") claim.u_scale.imaginary_unit = true;
    else if (parts[7] != "real") throw OcticError("u-scale flag must be real|imag");
    if (parts.size() >= 9 && !parts[8].empty()) {
      std::vector<std::string> images = split_ws(parts[8]);
      if (images.size() != 2) throw OcticError("bad parameter map in claim: " + raw);
      claim.param_map = std::make_pair(parse_form(images[0], f, true),
                                       parse_form(images[1], f, true));
    }
    out.push_back(std::move(claim));
  }
  return out;
}

std::vector<GaloisClaim> Corpus::galois_claims() const {
  std::vector<GaloisClaim> out;
  fs::path path = fs::path(data_dir_) / "claims" / "galois_maps.txt";
  std::istringstream is(read_file(path));
  std::string raw;
  while (std::getline(is, raw)) {
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (strip(line).empty()) continue;
    std::vector<std::string> parts = split_on(line, ';');
    for (std::string& p : parts) p = strip(p);
    if (parts.size() < 6) throw OcticError("bad galois claim: " + raw);
    GaloisClaim claim;
    claim.label = parts[0];
    claim.sigma = Perm::from_cycles(parts[1]);
    const CorpusEntry* entry = find(claim.label);
    if (!entry) throw OcticError("galois claim for unknown entry " + claim.label);
    FieldDesc f = entry->arrangement.field;
    bool params = entry->arrangement.parametric;
    claim.matrix = parse_matrix({parts[2], parts[3], parts[4], parts[5]}, f, params);
    if (parts.size() >= 7 && !parts[6].empty()) {
      std::vector<std::string> images = split_ws(parts[6]);
      claim.param_map = std::make_pair(parse_form(images[0], f, true),
                                       parse_form(images[1], f, true));
    }
    out.push_back(std::move(claim));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<ParamPoint> generic_samples(const Arrangement& family, int count,
                                        unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> den(1, 12);
  std::vector<ParamPoint> out;
  FieldDesc f = family.field;
  std::vector<BinForm> minors;
  for (uint8_t quad : subsets::all_quads()) {
    BinForm m = quad_minor(family, quad);
    if (!m.is_zero() && !m.is_constant()) minors.push_back(std::move(m));
  }
  int guard = 0;
  while (static_cast<int>(out.size()) < count && guard++ < 10000) {
    ParamPoint t(Scalar(Rational(num(rng)), f), Scalar(Rational(den(rng)), f));
    bool special = false;
    for (const BinForm& m : minors)
      if (eval_at(m, t).is_zero()) {
        special = true;
        break;
      }
    if (special) continue;
    bool dup = false;
    for (const ParamPoint& prev : out)
      if (prev == t) dup = true;
    if (!dup) out.push_back(t);
  }
  if (static_cast<int>(out.size()) < count)
    throw OcticError("could not sample enough generic parameters");
  return out;
}

FibTableMatch fibtable_matches(const Arrangement& arr, const ExpectedFibTable& expected,
                               std::string* diagnostic) {
  std::vector<KummerPartition> parts = kummer_partitions(arr);
  const size_t ncols = expected.positions.size();
  std::vector<PencilPoint> printed_cr;
  for (size_t c = 0; c < ncols; ++c)
    printed_cr.push_back(cross_ratio(expected.positions[0], expected.positions[1],
                                     expected.positions[2], expected.positions[c]));

  // cross_limit: how many leading columns must reproduce the printed
  // cross-ratios (all of them for the full match, four for the
  // fourth-column level, none for tables with fewer than four columns).
  auto try_match = [&](size_t cross_limit) {
    for (const KummerPartition& part : parts) {
      FiberModel model = fiber_model(arr, part);
      std::vector<PencilPoint> positions;
      for (const FiberSide& side : model.sides)
        for (const Fiber& fiber : side.fibers) {
          bool known = false;
          for (const PencilPoint& p : positions)
            if (p.same(fiber.position)) known = true;
          if (!known) positions.push_back(fiber.position);
        }
      if (positions.size() != ncols) continue;

      auto line_count_at = [&](const FiberSide& side, const PencilPoint& p) {
        for (const Fiber& fiber : side.fibers)
          if (fiber.position.same(p)) return static_cast<int>(fiber.lines.size());
        return 0;
      };

      for (int swap = 0; swap < 2; ++swap) {
        const FiberSide& row0 = model.sides[static_cast<size_t>(swap)];
        const FiberSide& row1 = model.sides[static_cast<size_t>(1 - swap)];
        for (size_t i = 0; i < positions.size(); ++i)
          for (size_t j = 0; j < positions.size(); ++j)
            for (size_t k = 0; k < positions.size(); ++k) {
              if (i == j || j == k || i == k) continue;
              std::vector<bool> used(positions.size(), false);
              bool ok = true;
              for (size_t c = 0; c < ncols && ok; ++c) {
                int found = -1;
                for (size_t p = 0; p < positions.size(); ++p) {
                  if (used[p]) continue;
                  if (c < cross_limit) {
                    PencilPoint cr = cross_ratio(positions[i], positions[j],
                                                 positions[k], positions[p]);
                    if (!cr.same(printed_cr[c])) continue;
                  }
                  if (line_count_at(row0, positions[p]) != expected.rows[0][c]) continue;
                  if (line_count_at(row1, positions[p]) != expected.rows[1][c]) continue;
                  found = static_cast<int>(p);
                  break;
                }
                if (found < 0) ok = false;
                else used[static_cast<size_t>(found)] = true;
              }
              if (ok) return true;
            }
      }
    }
    return false;
  };

  if (try_match(ncols)) return FibTableMatch::Full;
  if (ncols >= 4 && try_match(4)) {
    if (diagnostic)
      *diagnostic =
          "matched types and the fourth-column cross-ratio, but the printed "
          "coordinates of later columns do not fit the printed equation";
    return FibTableMatch::FourthColumn;
  }
  if (diagnostic) *diagnostic = "no partition reproduces the printed table";
  return FibTableMatch::None;
}

// ---------------------------------------------------------------------------
// corpus_check

namespace {

std::string digits_list(const std::vector<uint8_t>& masks) {
  std::string out;
  for (size_t i = 0; i < masks.size(); ++i) {
    if (i) out += " ";
    out += subsets::to_digits(masks[i]);
  }
  return out;
}

void check_entry(const Corpus& corpus, const CorpusEntry& entry, EntryCheck& result) {
  const Arrangement& arr = entry.arrangement;
  std::string category = "general";
  auto fail = [&](const std::string& what) {
    result.failures.push_back(what);
    ++result.failures_by_category[category];
  };
  auto run = [&](const std::string& what, bool ok) {
    ++result.checks_run;
    ++result.checks_by_category[category];
    if (!ok) fail(what);
  };

  IncidenceTable table = incidence_table(arr);
  CanonicalForm canon = canonical_form(table);

  if (entry.minimal) {
    category = "minimal";
    run("minimal table differs: computed {" + canon.minimal.str() + "}",
        canon.minimal == *entry.minimal);
  }
  if (entry.min_perm) {
    category = "minperm";
    run("printed minimizing permutation does not attain the minimum",
        table.relabel(*entry.min_perm) == canon.minimal);
  }
  if (entry.symmetry_name) {
    category = "symmetry";
    SymmetryGroup group = symmetry_group(table);
    auto expected_order = named_group_order(*entry.symmetry_name);
    run("unknown symmetry name " + *entry.symmetry_name, expected_order.has_value());
    if (expected_order)
      run("stabilizer order " + std::to_string(group.order) + " != " +
              std::to_string(*expected_order) + " of " + *entry.symmetry_name,
          group.order == *expected_order);
    run("profile dictionary names " + group.name.value_or("(none)") + ", printed " +
            *entry.symmetry_name,
        group.name && *group.name == *entry.symmetry_name);
    for (const Perm& g : entry.generators)
      run("printed generator " + g.cycles() + " does not fix the table",
          table.relabel(g) == table);
    if (!entry.generators.empty())
      run("printed generators do not generate the stabilizer",
          generated_subgroup_order(entry.generators) == group.order);
  }
  if (entry.singular) {
    category = "singular";
    try {
      DerivedIncidence derived = derive(table);
      Census c = census(table, derived);
      auto points_of = [&](const std::string& type) {
        std::vector<uint8_t> out;
        for (const auto& [mask, t] : c.points)
          if (t == type) out.push_back(mask);
        std::sort(out.begin(), out.end(), subsets::tuple_less);
        return out;
      };
      run("p04 differs: computed " + digits_list(points_of("p40")),
          points_of("p40") == entry.singular->p04);
      run("p14 differs: computed " + digits_list(points_of("p41")),
          points_of("p41") == entry.singular->p14);
      run("p05 differs: computed " + digits_list(points_of("p50")),
          points_of("p50") == entry.singular->p05);
      run("p15 differs: computed " + digits_list(points_of("p51")),
          points_of("p51") == entry.singular->p15);
      run("p25 differs: computed " + digits_list(points_of("p52")),
          points_of("p52") == entry.singular->p25);
      run("l3 differs: computed " + digits_list(c.lines), c.lines == entry.singular->l3);
      run("l2 relation", c.l2 == 28 - 3 * c.l3);
    } catch (const RelationViolation& e) {
      fail(std::string("census relations: ") + e.what());
    }
  }
  if (entry.has_specials) {
    category = "special";
    SpecialValuesReport report = special_values(arr, corpus.lookup_fn());
    run("unresolved minor factors remain", report.unresolved.empty());
    run("special value count " + std::to_string(report.values.size()) + " != " +
            std::to_string(entry.specials.size()),
        report.values.size() == entry.specials.size());
    for (const ExpectedSpecial& expected : entry.specials) {
      const SpecialValue* found = nullptr;
      for (const SpecialValue& value : report.values) {
        if (expected.infinity != value.at.is_infinity()) continue;
        bool same_number;
        if (expected.infinity) {
          // infinity is field-agnostic
          same_number = value.field == expected.field || expected.field.is_rational();
        } else if (value.field == expected.field) {
          same_number = value.at.a == expected.value;
        } else if (expected.field.is_rational() && value.at.a.is_rational_value()) {
          // rational-valued point of a family over a quadratic field
          same_number = value.at.a.a() == expected.value.a();
        } else {
          same_number = false;
        }
        if (!same_number) continue;
        found = &value;
        break;
      }
      std::string name = (expected.infinity ? std::string("inf") : expected.value.str());
      if (!found) {
        fail("special value " + name + " not found");
        ++result.checks_run;
        continue;
      }
      bool verdict_ok =
          expected.verdict == ExpectedSpecial::Verdict::NonCY
              ? found->kind == SpecialValue::Kind::NonCY
              : found->kind == SpecialValue::Kind::Known &&
                    found->corpus_label == expected.label;
      run("special value " + name + " verdict differs: computed " + found->str(),
          verdict_ok);
    }
  }
  if (entry.has_partitions) {
    category = "partitions";
    std::vector<KummerPartition> parts = kummer_partitions(arr);
    std::vector<std::pair<uint8_t, uint8_t>> computed;
    for (const KummerPartition& p : parts) computed.emplace_back(p.first, p.second);
    std::vector<std::pair<uint8_t, uint8_t>> expected = entry.partitions;
    auto cmp = [](const std::pair<uint8_t, uint8_t>& a,
                  const std::pair<uint8_t, uint8_t>& b) {
      return subsets::tuple_less(a.first, b.first);
    };
    std::sort(computed.begin(), computed.end(), cmp);
    std::sort(expected.begin(), expected.end(), cmp);
    std::string got;
    for (const auto& [a, b] : computed)
      got += subsets::to_digits(a) + "-" + subsets::to_digits(b) + " ";
    run("partitions differ: computed " + got, computed == expected);

    // matching agreement on every partition (generic member)
    category = "matching";
    for (const KummerPartition& p : parts) {
      try {
        FiberModel model = fiber_model(arr, p);
        match_fibers(arr, p, model);
        ++result.checks_run;
        ++result.checks_by_category[category];
      } catch (const OcticError& e) {
        fail("fiber matching on " + subsets::to_digits(p.first) + ": " + e.what());
      }
    }
  }
  category = "fibtable";
  for (size_t i = 0; i < entry.fibtables.size(); ++i) {
    std::string diag;
    FibTableMatch level = fibtable_matches(arr, entry.fibtables[i], &diag);
    run("fibration table " + std::to_string(i + 1) + ": " + diag,
        level != FibTableMatch::None);
    if (level == FibTableMatch::FourthColumn)
      result.warnings.push_back("fibration table " + std::to_string(i + 1) + ": " + diag);
  }
  // matching agreement at sampled parameters
  category = "matching";
  if (arr.parametric) {
    try {
      std::vector<ParamPoint> samples = generic_samples(arr, 10);
      for (const ParamPoint& t : samples) {
        Arrangement member = specialize(arr, t);
        for (const KummerPartition& p : kummer_partitions(member)) {
          FiberModel model = fiber_model(member, p);
          match_fibers(member, p, model);
        }
      }
      ++result.checks_run;
      ++result.checks_by_category[category];
    } catch (const OcticError& e) {
      fail(std::string("sampled fiber matching: ") + e.what());
    }
  }
}

}  // namespace

CorpusCheckResult corpus_check(const Corpus& corpus, const std::string& scope,
                               int threads) {
  std::vector<const CorpusEntry*> selected;
  for (const CorpusEntry& entry : corpus.entries()) {
    if (scope == "rigid" && !entry.rigid) continue;
    if (scope == "families" && entry.rigid) continue;
    selected.push_back(&entry);
  }
  CorpusCheckResult result;
  result.entries.resize(selected.size());

  int nthreads = threads > 0 ? threads
                             : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::future<void>> futures;
  std::atomic<size_t> cursor{0};
  for (int t = 0; t < nthreads; ++t)
    futures.push_back(std::async(std::launch::async, [&] {
      while (true) {
        size_t i = cursor.fetch_add(1);
        if (i >= selected.size()) break;
        EntryCheck& check = result.entries[i];
        check.label = selected[i]->label;
        try {
          check_entry(corpus, *selected[i], check);
        } catch (const std::exception& e) {
          check.failures.push_back(std::string("exception: ") + e.what());
        }
      }
    }));
  for (auto& f : futures) f.get();

  for (const EntryCheck& check : result.entries) {
    result.total_checks += check.checks_run;
    result.total_failures += static_cast<int>(check.failures.size());
  }
  return result;
}

}  // namespace octic
