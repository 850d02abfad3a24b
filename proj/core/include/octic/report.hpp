#pragma once

#include <optional>
#include <string>
#include <vector>

#include "octic/corpus.hpp"

namespace octic {

/// Everything the per-arrangement report shows, computed once.
struct Report {
  std::string label;
  FieldDesc field;
  bool parametric = false;
  std::optional<ParamPoint> at;

  ValidityVerdict validity;
  std::optional<ParamPoint> validity_sample;  // sample used for families

  IncidenceTable table;
  CanonicalForm canon;
  SymmetryGroup symmetry;

  bool census_ok = false;
  Census censusv;
  std::string census_error;
  int euler = 0;

  std::vector<KummerPartition> partitions;
  std::vector<FiberModel> models;
  std::vector<FiberMatching> matchings;

  std::optional<SpecialValuesReport> specials;
  std::optional<int> h11, h12;
  std::vector<std::string> notes;
};

/// Run all analyses on one arrangement; `corpus` (optional) supplies the
/// lookup for special-value verdicts and the h11/h12 metadata.
Report build_report(const Arrangement& arr, const Corpus* corpus,
                    const std::optional<ParamPoint>& at = {});

std::string render_report_text(const Report& report);

}  // namespace octic
