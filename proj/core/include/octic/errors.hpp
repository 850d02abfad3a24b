#pragma once

#include <stdexcept>
#include <string>

namespace octic {

struct OcticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : OcticError {
  DivisionByZero() : OcticError("division by zero") {}
};

// Operands live in different coefficient fields and no implicit embedding
// is performed; use embed() explicitly.
struct FieldMismatch : OcticError {
  FieldMismatch() : OcticError("scalars from different fields") {}
  explicit FieldMismatch(const std::string& what) : OcticError(what) {}
};

struct DegreeMismatch : OcticError {
  DegreeMismatch() : OcticError("binary forms of unequal nonzero degree") {}
};

struct ZeroFormError : OcticError {
  ZeroFormError() : OcticError("identically zero binary form") {}
};

struct ParseError : OcticError {
  int line = 0;
  int column = 0;
  ParseError(const std::string& msg, int line_, int column_)
      : OcticError("line " + std::to_string(line_) + ":" +
                   std::to_string(column_) + ": " + msg),
        line(line_),
        column(column_) {}
};

// A plane line mixing parameter degrees 0 and 1 across its coefficients.
struct MixedRowDegree : ParseError {
  MixedRowDegree(int line_, int column_)
      : ParseError("plane mixes parameter degrees", line_, column_) {}
};

struct DegeneratePlaneError : ParseError {
  DegeneratePlaneError(int line_, int column_)
      : ParseError("plane is identically zero", line_, column_) {}
};

struct MissingParameter : OcticError {
  MissingParameter()
      : OcticError("parametric arrangement needs a parameter value") {}
};

struct RelationViolation : OcticError {
  explicit RelationViolation(const std::string& what) : OcticError(what) {}
};

struct MatchingDisagreement : OcticError {
  explicit MatchingDisagreement(const std::string& what) : OcticError(what) {}
};

struct DegenerateLine : OcticError {
  explicit DegenerateLine(const std::string& what) : OcticError(what) {}
};

struct CoincidentAnchors : OcticError {
  CoincidentAnchors() : OcticError("normalization anchors coincide") {}
};

struct NoGeneralPositionQuintuple : OcticError {
  NoGeneralPositionQuintuple()
      : OcticError("no five planes in general position") {}
};

struct SampleIsSpecial : OcticError {
  explicit SampleIsSpecial(const std::string& what) : OcticError(what) {}
};

}  // namespace octic
