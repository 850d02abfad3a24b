#include "octic/report.hpp"

#include <sstream>

#include "octic/errors.hpp"

namespace octic {

Report build_report(const Arrangement& input, const Corpus* corpus,
                    const std::optional<ParamPoint>& at) {
  Report r;
  Arrangement arr = input;
  if (at) {
    arr = specialize(input, *at);
    r.at = at;
  }
  r.label = arr.label;
  r.field = arr.field;
  r.parametric = arr.parametric;

  if (arr.parametric) {
    ParamPoint sample = generic_samples(arr, 1)[0];
    r.validity_sample = sample;
    r.validity = validate(arr, sample);
  } else {
    r.validity = validate(arr);
  }

  r.table = incidence_table(arr);
  r.canon = canonical_form(r.table);
  r.symmetry = symmetry_group(r.table);

  try {
    r.censusv = census(r.table, derive(r.table));
    r.census_ok = true;
    r.euler = euler_characteristic(r.censusv);
  } catch (const RelationViolation& e) {
    r.census_error = e.what();
  }

  r.partitions = kummer_partitions(arr);
  for (const KummerPartition& p : r.partitions) {
    FiberModel model = fiber_model(arr, p);
    r.matchings.push_back(match_fibers(arr, p, model));
    r.models.push_back(std::move(model));
  }

  if (arr.parametric)
    r.specials = special_values(arr, corpus ? corpus->lookup_fn() : CanonicalLookup{});

  if (corpus && !r.label.empty()) {
    if (const CorpusEntry* entry = corpus->find(r.label)) {
      r.h11 = entry->h11;
      r.h12 = entry->h12;
      r.notes = entry->notes;
    }
  }
  return r;
}

namespace {

std::string point_set(const Census& c, const std::string& type) {
  std::string out;
  for (const auto& [mask, t] : c.points) {
    if (t != type) continue;
    if (!out.empty()) out += ", ";
    out += subsets::to_digits(mask);
  }
  return out.empty() ? "-" : out;
}

}  // namespace

std::string render_report_text(const Report& r) {
  std::ostringstream os;
  os << "Arrangement" << (r.label.empty() ? "" : " " + r.label) << "\n";
  os << "  field: " << r.field.str() << (r.parametric ? ", parametric" : "") << "\n";
  if (r.at) os << "  specialized at (A:B) = " << r.at->str() << "\n";
  if (r.validity_sample)
    os << "  validity (sampled at " << r.validity_sample->str()
       << "): " << (r.validity.valid ? "octic arrangement" : "violated") << "\n";
  else
    os << "  validity: " << (r.validity.valid ? "octic arrangement" : "violated") << "\n";
  for (const ValidityViolation& v : r.validity.violations) os << "    " << v.str() << "\n";

  os << "  incidence table (" << r.table.size() << "): " << r.table.str() << "\n";
  os << "  minimal incidences: " << r.canon.minimal.str() << "\n";
  os << "  minimizing permutation: " << r.canon.witness.cycles() << "\n";

  os << "  symmetries: order " << r.symmetry.order;
  if (r.symmetry.name) os << ", " << *r.symmetry.name;
  os << ", <";
  for (size_t i = 0; i < r.symmetry.generators.size(); ++i) {
    if (i) os << ", ";
    os << r.symmetry.generators[i].cycles();
  }
  os << ">\n";

  if (r.census_ok) {
    const Census& c = r.censusv;
    os << "  singular points:\n";
    os << "    p40: " << point_set(c, "p40") << "\n";
    os << "    p41: " << point_set(c, "p41") << "\n";
    os << "    p50: " << point_set(c, "p50") << "\n";
    os << "    p51: " << point_set(c, "p51") << "\n";
    os << "    p52: " << point_set(c, "p52") << "\n";
    std::string lines;
    for (uint8_t t : c.lines) {
      if (!lines.empty()) lines += ", ";
      lines += subsets::to_digits(t);
    }
    os << "    l3:  " << (lines.empty() ? "-" : lines) << "\n";
    os << "  census: l2=" << c.l2 << " l3=" << c.l3 << " p3=" << c.p3 << " p40=" << c.p40
       << " p41=" << c.p41 << " p50=" << c.p50 << " p51=" << c.p51 << " p52=" << c.p52
       << "\n";
    os << "  euler characteristic: " << r.euler << "\n";
  } else {
    os << "  census: " << r.census_error << "\n";
  }

  if (!r.partitions.empty()) {
    os << "  elliptic fibrations:\n";
    for (size_t i = 0; i < r.partitions.size(); ++i) {
      const KummerPartition& p = r.partitions[i];
      os << "    " << subsets::to_digits(p.first) << " -- " << subsets::to_digits(p.second)
         << ":";
      for (int side = 0; side < 2; ++side) {
        os << (side == 0 ? "  [" : " | [");
        const FiberSide& s = r.models[i].sides[static_cast<size_t>(side)];
        for (size_t k = 0; k < s.fibers.size(); ++k) {
          if (k) os << " ";
          os << kodaira_str(s.fibers[k].type);
        }
        os << "]";
      }
      os << "  matched " << r.matchings[i].pairs.size() << "\n";
    }
  }

  if (r.specials) {
    os << "  special values:\n";
    for (const SpecialValue& v : r.specials->values) {
      os << "    " << v.str();
      if (!(v.field == r.field) && !v.field.is_rational())
        os << "  (over " << v.field.str() << ")";
      os << "\n";
    }
    for (const BinForm& u : r.specials->unresolved)
      os << "    unresolved factor: " << u.str() << "\n";
  }

  if (r.h11 || r.h12) {
    os << "  hodge numbers:";
    if (r.h11) os << " h11=" << *r.h11;
    if (r.h12) os << " h12=" << *r.h12;
    os << "\n";
  }
  for (const std::string& note : r.notes) os << "  note: " << note << "\n";
  return os.str();
}

}  // namespace octic
