#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "octic/arrangement.hpp"
#include "octic/incidence.hpp"

namespace octic {

/// A parameter value (possibly in a quadratic extension) at which an extra
/// minor vanishes, with the classification of the specialized member.
struct SpecialValue {
  FieldDesc field;  // field of the specialization point
  ParamPoint at;

  enum class Kind { NonCY, Known, UnknownOctic };
  Kind kind = Kind::UnknownOctic;
  std::vector<ValidityViolation> violations;  // NonCY
  std::string corpus_label;                   // Known
  Perm witness;  // Known: relabeling onto the corpus arrangement's table
  IncidenceTable canonical;  // canonical table of the specialization

  std::string str() const;
};

struct SpecialValuesReport {
  std::vector<SpecialValue> values;
  std::vector<BinForm> unresolved;  // irreducible minor factors of degree >= 3
};

struct LookupHit {
  std::string label;
  Perm corpus_witness;  // minimizing permutation of the corpus entry's table
};
using CanonicalLookup =
    std::function<std::optional<LookupHit>(const IncidenceTable& minimal)>;

/// Roots of all not-identically-zero minors, each specialized, validated
/// and classified.  Quadratic roots of families over Q are specialized in
/// Q(sqrt(e)).
SpecialValuesReport special_values(const Arrangement& family,
                                   const CanonicalLookup& lookup = nullptr);

/// Projective transformation carrying arrangement a onto arrangement b:
/// f^b_{sigma(i)}(M v) = lambda_i f^a_i(v) for all eight planes.
struct EquivalenceWitness {
  Perm sigma;
  std::array<std::array<Scalar, 4>, 4> matrix;
  std::array<Scalar, 8> scales;
  Scalar cover_scalar;  // product of the eight scales

  EquivalenceWitness() : cover_scalar(Scalar::of(1)) {}
};

/// Search for a witness; with sigma absent every table-compatible
/// relabeling (canonical witnesses composed with the stabilizer) is tried.
std::optional<EquivalenceWitness> projective_equivalence(
    const Arrangement& a, const Arrangement& b, std::optional<Perm> sigma = {});

/// All witnesses, one per plane relabeling that admits one.
std::vector<EquivalenceWitness> all_equivalences(const Arrangement& a,
                                                 const Arrangement& b);

/// Claimed self-map of a one-parameter family.
struct ParameterMapClaim {
  std::string label;
  BinForm image_a, image_b;  // integer-linear forms in A, B
  enum class Kind { Straight, Twisted } kind = Kind::Straight;
  // which table the row is printed in; differs from `kind` only for rows
  // the bundled data annotates as errata of the source tables
  Kind printed_kind = Kind::Straight;

  ParamPoint apply(const ParamPoint& t) const;
  std::string str() const;
};

struct SampleVerdict {
  ParamPoint at, image;
  bool equivalent = false;
  bool has_square_cover = false;  // some witness with square cover scalar
  std::vector<Scalar> covers;     // cover scalars of all witnesses found
};

struct ParameterMapReport {
  bool all_equivalent = false;
  // straight: some relabeling admits witnesses at every sample whose cover
  // scalars all share one square class 1 or -1 (the lift scale is rational
  // or i times rational); twisted: equivalent but the class varies with
  // the parameter or is a fixed class other than +-1.
  bool straight = false;
  bool twisted = false;
  bool matches_claim = false;
  std::vector<SampleVerdict> samples;
};

/// Check a claimed parameter self-map at the given samples; samples (and
/// their images) must avoid the family's special values.
ParameterMapReport verify_parameter_map(const Arrangement& family,
                                        const ParameterMapClaim& claim,
                                        const std::vector<ParamPoint>& samples);

/// Default rational sample points for a family, skipping special values.
std::vector<ParamPoint> default_samples(const Arrangement& family,
                                        const ParameterMapClaim& claim, int count);

/// Scale factor of the double cover coordinate: u itself is
/// imaginary_unit ? i * form : form, and u^2 must equal the product of the
/// eight plane scales.
struct CoverScale {
  BinForm form;
  bool imaginary_unit = false;
};

struct CoverCheck {
  bool ok = false;
  std::string diagnostic;
};

/// Verify that v -> M v carries each source plane onto the target plane
/// sigma(i) (as divisors: f^src_i o M = lambda_i f^tgt_{sigma(i)}) and that
/// u_scale^2 equals the product of the lambda_i.  With `param_map`
/// present the target member is the family at the mapped parameter.
CoverCheck verify_cover_automorphism(
    const Arrangement& arr, const Perm& sigma,
    const std::array<std::array<BinForm, 4>, 4>& matrix, const CoverScale& u_scale,
    const std::optional<std::pair<BinForm, BinForm>>& param_map = {});

/// The divisor-carrying check alone (no cover coordinate), against an
/// explicit target arrangement; used for Galois-conjugate verifications.
CoverCheck verify_projective_map(const Arrangement& source, const Arrangement& target,
                                 const Perm& sigma,
                                 const std::array<std::array<BinForm, 4>, 4>& matrix);

}  // namespace octic
