#pragma once

#include <string>

#include "octic/binform.hpp"

namespace octic {

/// Quotient of two binary forms; denominator 1 unless division by a
/// parametric expression occurred.
struct FormRatio {
  BinForm num;
  BinForm den;

  bool is_form() const { return den.is_constant(); }
  /// Fold a constant denominator into the numerator.
  BinForm as_form() const;
};

/// Recursive-descent parser for coefficient and position expressions.
/// Tokens: integer literals, '/', 's' (the adjoined square root), 'A', 'B',
/// '+', '-', '*', parentheses.  `allow_params` gates 'A'/'B'; 's' needs a
/// quadratic field.  Errors carry (line, column) positions; `line` and
/// `column0` seed them for messages inside multi-line inputs.
FormRatio parse_form_ratio(const std::string& text, const FieldDesc& field,
                           bool allow_params, int line = 0, int column0 = 0);

/// Expression that must evaluate to a binary form (constant denominator).
BinForm parse_form(const std::string& text, const FieldDesc& field,
                   bool allow_params, int line = 0, int column0 = 0);

/// Expression that must evaluate to a scalar.
Scalar parse_scalar_expr(const std::string& text, const FieldDesc& field,
                         int line = 0, int column0 = 0);

/// Render a binary form in the grammar above (round-trip safe).
std::string render_form(const BinForm& f);

}  // namespace octic
