#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "octic/report.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

struct Session {
  std::string data_dir;
  std::optional<octic::Corpus> corpus;

  octic::Corpus& get_corpus() {
    if (!corpus) corpus = octic::Corpus::load(data_dir);
    return *corpus;
  }

  octic::Arrangement load_arrangement(const std::string& ref) {
    namespace fs = std::filesystem;
    if (fs::exists(ref) && fs::is_regular_file(ref)) {
      std::ifstream in(ref);
      std::ostringstream os;
      os << in.rdbuf();
      return octic::parse_arrangement(os.str());
    }
    const octic::CorpusEntry* entry = get_corpus().find(ref);
    if (!entry) throw octic::OcticError("no such file or corpus label: " + ref);
    return entry->arrangement;
  }
};

octic::ParamPoint parse_at(const std::string& text) {
  using namespace octic;
  if (text == "inf") return ParamPoint::infinity(FieldDesc::rational());
  std::string a = text, b = "1";
  if (auto colon = text.find(':'); colon != std::string::npos) {
    a = text.substr(0, colon);
    b = text.substr(colon + 1);
  }
  FieldDesc f;
  return ParamPoint(parse_scalar_expr(a, f), parse_scalar_expr(b, f));
}

json point_json(const octic::ParamPoint& p) { return p.str(); }

json census_json(const octic::Report& r) {
  json j;
  if (!r.census_ok) {
    j["error"] = r.census_error;
    return j;
  }
  const octic::Census& c = r.censusv;
  j["l2"] = c.l2;
  j["l3"] = c.l3;
  j["p3"] = c.p3;
  j["p40"] = c.p40;
  j["p41"] = c.p41;
  j["p50"] = c.p50;
  j["p51"] = c.p51;
  j["p52"] = c.p52;
  json points = json::object();
  for (const auto& [mask, type] : c.points)
    points[type].push_back(octic::subsets::to_digits(mask));
  j["points"] = points;
  json lines = json::array();
  for (uint8_t t : c.lines) lines.push_back(octic::subsets::to_digits(t));
  j["lines"] = lines;
  j["euler"] = r.euler;
  return j;
}

json table_json(const octic::IncidenceTable& t) {
  json arr = json::array();
  for (uint8_t q : t.quads()) arr.push_back(octic::subsets::to_digits(q));
  return arr;
}

json fibrations_json(const octic::Report& r) {
  json out = json::array();
  for (size_t i = 0; i < r.partitions.size(); ++i) {
    json j;
    j["first"] = octic::subsets::to_digits(r.partitions[i].first);
    j["second"] = octic::subsets::to_digits(r.partitions[i].second);
    json sides = json::array();
    for (const octic::FiberSide& side : r.models[i].sides) {
      json s;
      s["quad"] = octic::subsets::to_digits(side.quad);
      json fibers = json::array();
      for (const octic::Fiber& fiber : side.fibers) {
        json fj;
        fj["type"] = octic::kodaira_str(fiber.type);
        fj["position"] = fiber.position.str();
        json lines = json::array();
        for (auto [a, b] : fiber.lines)
          lines.push_back(std::to_string(a) + std::to_string(b));
        fj["lines"] = lines;
        fibers.push_back(fj);
      }
      s["fibers"] = fibers;
      sides.push_back(s);
    }
    j["sides"] = sides;
    j["matched"] = r.matchings[i].pairs.size();
    out.push_back(j);
  }
  return out;
}

json specials_json(const octic::SpecialValuesReport& report) {
  json out = json::array();
  for (const octic::SpecialValue& v : report.values) {
    json j;
    j["at"] = v.at.str();
    j["field"] = v.field.str();
    switch (v.kind) {
      case octic::SpecialValue::Kind::NonCY: {
        j["verdict"] = "non-CY";
        json viols = json::array();
        for (const auto& violation : v.violations) viols.push_back(violation.str());
        j["violations"] = viols;
        break;
      }
      case octic::SpecialValue::Kind::Known:
        j["verdict"] = "arrangement";
        j["label"] = v.corpus_label;
        j["witness"] = v.witness.cycles();
        break;
      case octic::SpecialValue::Kind::UnknownOctic:
        j["verdict"] = "octic-unknown";
        j["canonical"] = table_json(v.canonical);
        break;
    }
    out.push_back(j);
  }
  return out;
}

json report_json(const octic::Report& r) {
  json j;
  if (!r.label.empty()) j["label"] = r.label;
  j["field"] = r.field.str();
  j["parametric"] = r.parametric;
  if (r.at) j["at"] = point_json(*r.at);
  j["valid"] = r.validity.valid;
  json viols = json::array();
  for (const auto& v : r.validity.violations) viols.push_back(v.str());
  j["violations"] = viols;
  j["incidence_table"] = table_json(r.table);
  j["minimal_incidences"] = table_json(r.canon.minimal);
  j["minimizing_permutation"] = r.canon.witness.cycles();
  json sym;
  sym["order"] = r.symmetry.order;
  if (r.symmetry.name) sym["name"] = *r.symmetry.name;
  json gens = json::array();
  for (const octic::Perm& g : r.symmetry.generators) gens.push_back(g.cycles());
  sym["generators"] = gens;
  j["symmetries"] = sym;
  j["census"] = census_json(r);
  j["fibrations"] = fibrations_json(r);
  if (r.specials) j["special_values"] = specials_json(*r.specials);
  if (r.h11) j["h11"] = *r.h11;
  if (r.h12) j["h12"] = *r.h12;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"double octic arrangement toolkit"};
  app.require_subcommand(1);

  Session session;
  app.add_option("--data-dir", session.data_dir, "corpus/claims data directory")
      ->default_val(octic::default_data_dir());

  std::string ref, ref_b, at_text, sigma_text, scope = "all", emit_path, state_text;
  bool as_json = false;
  int samples = 3, depth = 3, threads = 0;
  size_t cap = static_cast<size_t>(-1);

  auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", as_json, "JSON output"); };
  auto add_at = [&](CLI::App* cmd) {
    cmd->add_option("--at", at_text, "parameter value A:B (or a single rational)");
  };

  CLI::App* report = app.add_subcommand("report", "full per-arrangement report");
  report->add_option("arrangement", ref, "corpus label or file")->required();
  add_at(report);
  add_json(report);

  CLI::App* canon = app.add_subcommand("canon", "minimal incidence table and witness");
  canon->add_option("arrangement", ref)->required();
  add_at(canon);
  add_json(canon);

  CLI::App* census_cmd = app.add_subcommand("census", "singularity census");
  census_cmd->add_option("arrangement", ref)->required();
  add_at(census_cmd);
  add_json(census_cmd);

  CLI::App* fib = app.add_subcommand("fibrations", "opposite fourfold points and fibers");
  fib->add_option("arrangement", ref)->required();
  add_at(fib);
  add_json(fib);

  CLI::App* special = app.add_subcommand("special", "special elements of a family");
  special->add_option("arrangement", ref)->required();
  add_json(special);

  CLI::App* equiv = app.add_subcommand("equiv", "projective equivalence of two arrangements");
  equiv->add_option("a", ref)->required();
  equiv->add_option("b", ref_b)->required();
  equiv->add_option("--sigma", sigma_text, "plane relabeling in cycle notation");
  add_json(equiv);

  CLI::App* selfmaps = app.add_subcommand("selfmaps", "verify bundled parameter self-maps");
  selfmaps->add_option("label", ref)->required();
  selfmaps->add_option("--samples", samples, "sample count")->default_val(3);
  add_json(selfmaps);

  CLI::App* enumerate = app.add_subcommand("enumerate", "work-list classification");
  enumerate->add_option("--depth", depth, "free quadruple additions")->required();
  enumerate->add_option("--emit", emit_path, "write canonical states to a file");
  enumerate->add_option("--cap", cap, "class cap (graceful truncation)");
  enumerate->add_option("--threads", threads, "worker threads (0 = hardware)");

  CLI::App* check = app.add_subcommand("corpus-check", "regression comparison");
  check->add_option("--scope", scope, "rigid | families | all")
      ->check(CLI::IsMember({"rigid", "families", "all"}))
      ->default_val("all");
  check->add_option("--threads", threads, "worker threads (0 = hardware)");

  CLI::App* verify = app.add_subcommand("verify-realization",
                                        "check an arrangement against a target state");
  verify->add_option("arrangement", ref)->required();
  verify->add_option("state", state_text, "T:{...} Q:{...} P:{...}")->required();
  add_at(verify);

  CLI11_PARSE(app, argc, argv);

  try {
    std::optional<octic::ParamPoint> at;
    if (!at_text.empty()) at = parse_at(at_text);

    if (report->parsed() || canon->parsed() || census_cmd->parsed() || fib->parsed() ||
        special->parsed()) {
      octic::Arrangement arr = session.load_arrangement(ref);
      const octic::Corpus* corpus = nullptr;
      try {
        corpus = &session.get_corpus();
      } catch (...) {
        corpus = nullptr;  // raw files work without a data dir
      }
      octic::Report r = octic::build_report(arr, corpus, at);
      if (report->parsed()) {
        if (as_json) std::cout << report_json(r).dump(2) << "\n";
        else std::cout << octic::render_report_text(r);
      } else if (canon->parsed()) {
        if (as_json) {
          json j;
          j["minimal_incidences"] = table_json(r.canon.minimal);
          j["minimizing_permutation"] = r.canon.witness.cycles();
          std::cout << j.dump(2) << "\n";
        } else {
          std::cout << "minimal incidences: " << r.canon.minimal.str() << "\n";
          std::cout << "minimizing permutation: " << r.canon.witness.cycles() << "\n";
        }
      } else if (census_cmd->parsed()) {
        if (!r.census_ok) {
          std::cerr << "census failed: " << r.census_error << "\n";
          return kExitCheckFailed;
        }
        if (as_json) std::cout << census_json(r).dump(2) << "\n";
        else std::cout << octic::render_report_text(r);
      } else if (fib->parsed()) {
        if (as_json) std::cout << fibrations_json(r).dump(2) << "\n";
        else std::cout << octic::render_report_text(r);
      } else {
        if (!r.specials) {
          std::cerr << "not a one-parameter family\n";
          return kExitInputError;
        }
        if (as_json) std::cout << specials_json(*r.specials).dump(2) << "\n";
        else {
          for (const octic::SpecialValue& v : r.specials->values)
            std::cout << v.str() << "\n";
          for (const octic::BinForm& u : r.specials->unresolved)
            std::cout << "unresolved factor: " << u.str() << "\n";
        }
      }
      return kExitOk;
    }

    if (equiv->parsed()) {
      octic::Arrangement a = session.load_arrangement(ref);
      octic::Arrangement b = session.load_arrangement(ref_b);
      std::optional<octic::Perm> sigma;
      if (!sigma_text.empty()) sigma = octic::Perm::from_cycles(sigma_text);
      auto witness = octic::projective_equivalence(a, b, sigma);
      if (!witness) {
        std::cout << "not projectively equivalent\n";
        return kExitCheckFailed;
      }
      if (as_json) {
        json j;
        j["sigma"] = witness->sigma.cycles();
        json m = json::array();
        for (const auto& row : witness->matrix) {
          json jr = json::array();
          for (const octic::Scalar& c : row) jr.push_back(c.str());
          m.push_back(jr);
        }
        j["matrix"] = m;
        json scales = json::array();
        for (const octic::Scalar& s : witness->scales) scales.push_back(s.str());
        j["scales"] = scales;
        j["cover_scalar"] = witness->cover_scalar.str();
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "equivalent via sigma = " << witness->sigma.cycles() << "\n";
        for (const auto& row : witness->matrix) {
          std::cout << "  [";
          for (size_t c = 0; c < 4; ++c) std::cout << (c ? ", " : "") << row[c].str();
          std::cout << "]\n";
        }
        std::cout << "cover scalar: " << witness->cover_scalar.str() << "\n";
      }
      return kExitOk;
    }

    if (selfmaps->parsed()) {
      octic::Corpus& corpus = session.get_corpus();
      const octic::CorpusEntry* entry = corpus.find(ref);
      if (!entry || !entry->arrangement.parametric) {
        std::cerr << "no such family: " << ref << "\n";
        return kExitInputError;
      }
      bool all_ok = true;
      json out = json::array();
      for (const octic::ParameterMapClaim& claim : corpus.selfmap_claims()) {
        if (claim.label != ref) continue;
        auto samples_list = octic::default_samples(entry->arrangement, claim, samples);
        octic::ParameterMapReport r =
            octic::verify_parameter_map(entry->arrangement, claim, samples_list);
        std::string kind =
            claim.kind == octic::ParameterMapClaim::Kind::Straight ? "straight" : "twisted";
        if (as_json) {
          json j;
          j["map"] = claim.str();
          j["claimed"] = kind;
          j["equivalent"] = r.all_equivalent;
          j["straight"] = r.straight;
          j["twisted"] = r.twisted;
          j["matches"] = r.matches_claim;
          out.push_back(j);
        } else {
          std::cout << claim.str() << " claimed " << kind << ": "
                    << (r.matches_claim ? "verified" : "MISMATCH") << "\n";
        }
        all_ok = all_ok && r.matches_claim;
      }
      if (as_json) std::cout << out.dump(2) << "\n";
      return all_ok ? kExitOk : kExitCheckFailed;
    }

    if (enumerate->parsed()) {
      octic::EnumerationResult result = octic::enumerate_classes(depth, cap, threads);
      std::cout << "classes: " << result.classes.size() << "\n";
      for (size_t d = 0; d < result.per_depth.size(); ++d)
        std::cout << "  depth " << (d + 1) << ": " << result.per_depth[d] << " new\n";
      for (const auto& [reason, count] : result.stats.prunes)
        std::cout << "  pruned (" << reason << "): " << count << "\n";
      if (result.truncated) std::cout << "  truncated at cap " << cap << "\n";
      if (!emit_path.empty()) {
        std::ofstream out(emit_path);
        for (const octic::EnumState& s : result.classes)
          out << octic::format_state(s) << "\n";
        std::cout << "wrote " << result.classes.size() << " states to " << emit_path
                  << "\n";
      }
      return kExitOk;
    }

    if (check->parsed()) {
      octic::Corpus& corpus = session.get_corpus();
      octic::CorpusCheckResult result = octic::corpus_check(corpus, scope, threads);
      for (const octic::EntryCheck& entry : result.entries) {
        if (entry.failures.empty()) {
          std::cout << "ok   " << entry.label << " (" << entry.checks_run << " checks)\n";
        } else {
          std::cout << "FAIL " << entry.label << "\n";
          for (const std::string& f : entry.failures) std::cout << "     " << f << "\n";
        }
        for (const std::string& w : entry.warnings)
          std::cout << "     note: " << w << "\n";
      }
      std::cout << result.total_checks << " checks, " << result.total_failures
                << " failures\n";
      return result.ok() ? kExitOk : kExitCheckFailed;
    }

    if (verify->parsed()) {
      octic::Arrangement arr = session.load_arrangement(ref);
      octic::EnumState target = octic::parse_state(state_text);
      octic::RealizationCheck r = octic::verify_realization(arr, target, at);
      std::cout << "incidence table: " << r.table.str() << "\n";
      std::cout << "contains state quadruples: " << (r.table_contains_quads ? "yes" : "no")
                << "\n";
      std::cout << "derived structure matches: " << (r.derived_matches ? "yes" : "no")
                << "\n";
      if (!r.extra_quads.empty()) {
        std::cout << "extra incidences:";
        for (uint8_t q : r.extra_quads) std::cout << " " << octic::subsets::to_digits(q);
        std::cout << "\n";
      }
      return r.ok ? kExitOk : kExitCheckFailed;
    }
  } catch (const octic::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
