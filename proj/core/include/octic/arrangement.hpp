#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "octic/binform.hpp"
#include "octic/incidence.hpp"

namespace octic {

/// A plane given by a linear form in x, y, z, t whose coefficients are
/// binary forms in the parameters; all four coefficients share one
/// parameter degree (0 or 1).
struct LinearForm {
  std::array<BinForm, 4> coeff;
  int param_degree = 0;
};

struct Arrangement {
  FieldDesc field;
  bool parametric = false;
  std::array<LinearForm, 8> planes;
  std::string label;
};

struct ValidityViolation {
  enum class Kind { DuplicatePlane, FourShareLine, SixSharePoint, DegeneratePlane };
  Kind kind;
  uint8_t planes;  // the offending subset
  std::string str() const;
};

struct ValidityVerdict {
  bool valid = true;
  std::vector<ValidityViolation> violations;
};

/// Parse the line-oriented arrangement file format:
///   # comment, blank lines ignored
///   field rational | field quad <d>
///   params                (declares parameters A, B)
///   label <string>
///   plane <c1> <c2> <c3> <c4>   (8 of these; expressions without spaces)
Arrangement parse_arrangement(const std::string& text);

/// Inverse of parse_arrangement up to formatting.
std::string render_arrangement(const Arrangement& arr);

/// Plain determinant of the four coefficient rows of a quadruple.
BinForm quad_minor(const Arrangement& arr, uint8_t quad);

/// The 70 maximal minors in lexicographic quadruple order.  The k-th entry
/// carries the listing sign (-1)^k relative to the row-selected
/// determinant; vanishing is what downstream consumers key on.
std::vector<std::pair<uint8_t, BinForm>> all_minors(const Arrangement& arr);

/// Incident quadruples: minor identically zero (generic table), or zero
/// after evaluating at the given parameter point.
IncidenceTable incidence_table(const Arrangement& arr,
                               const std::optional<ParamPoint>& at = {});

/// Octic-arrangement conditions via exact rank checks on specialized rows.
ValidityVerdict validate(const Arrangement& arr,
                         const std::optional<ParamPoint>& at = {});

/// Coefficient rows as scalars; parametric arrangements need `at`.
std::vector<std::array<Scalar, 4>> scalar_rows(const Arrangement& arr,
                                               const std::optional<ParamPoint>& at = {});

/// Evaluate the parameter, possibly extending the coefficient field to the
/// field of the point.
Arrangement specialize(const Arrangement& arr, const ParamPoint& at);

/// Evaluate at the pair (a, b) exactly as given, without projective
/// normalization; the choice of representative scales each parametric
/// plane and with it the octic equation, which the cover-scalar
/// computations are sensitive to.
Arrangement specialize(const Arrangement& arr, const Scalar& a, const Scalar& b);

Arrangement embed_arrangement(const Arrangement& arr, FieldDesc target);

/// Galois-conjugate every coefficient.
Arrangement conjugate_arrangement(const Arrangement& arr);

/// Substitute the parameters: A -> image_a, B -> image_b (degree-1 forms).
Arrangement substitute_parameters(const Arrangement& arr, const BinForm& image_a,
                                  const BinForm& image_b);

}  // namespace octic
