#include "octic/arrangement.hpp"

#include <algorithm>
#include <sstream>

#include "octic/errors.hpp"
#include "octic/expr.hpp"

namespace octic {

std::string ValidityViolation::str() const {
  switch (kind) {
    case Kind::DuplicatePlane:
      return "DuplicatePlane(" + subsets::to_digits(planes) + ")";
    case Kind::FourShareLine:
      return "FourShareLine(" + subsets::to_digits(planes) + ")";
    case Kind::SixSharePoint:
      return "SixSharePoint(" + subsets::to_digits(planes) + ")";
    case Kind::DegeneratePlane:
      return "DegeneratePlane(" + subsets::to_digits(planes) + ")";
  }
  return "?";
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

}  // namespace

Arrangement parse_arrangement(const std::string& text) {
  Arrangement arr;
  bool field_set = false;
  int plane_count = 0;

  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::vector<std::string> toks = split_ws(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    if (kw == "field") {
      if (field_set) throw ParseError("duplicate field line", lineno, 1);
      if (toks.size() == 2 && toks[1] == "rational") {
        arr.field = FieldDesc::rational();
      } else if (toks.size() == 3 && toks[1] == "quad") {
        Int d;
        try {
          d = Int(toks[2]);
        } catch (...) {
          throw ParseError("bad field discriminant", lineno, 1);
        }
        try {
          arr.field = FieldDesc::quadratic(d);
        } catch (const OcticError& e) {
          throw ParseError(e.what(), lineno, 1);
        }
      } else {
        throw ParseError("expected 'field rational' or 'field quad <d>'", lineno, 1);
      }
      field_set = true;
    } else if (kw == "params") {
      arr.parametric = true;
    } else if (kw == "label") {
      arr.label = toks.size() > 1 ? toks[1] : "";
    } else if (kw == "plane") {
      if (!field_set) throw ParseError("plane before field declaration", lineno, 1);
      if (toks.size() != 5)
        throw ParseError("plane needs exactly 4 coefficients", lineno, 1);
      if (plane_count == 8) throw ParseError("more than 8 planes", lineno, 1);
      LinearForm plane;
      int degree = -1;
      bool all_zero = true;
      for (int c = 0; c < 4; ++c) {
        BinForm f = parse_form(toks[static_cast<size_t>(c + 1)], arr.field,
                               arr.parametric, lineno, 0);
        if (f.degree() > 1)
          throw ParseError("coefficient degree exceeds 1", lineno, 1);
        if (!f.is_zero()) {
          all_zero = false;
          if (degree == -1) degree = f.degree();
          else if (degree != f.degree()) throw MixedRowDegree(lineno, 1);
        }
        plane.coeff[static_cast<size_t>(c)] = std::move(f);
      }
      if (all_zero) throw DegeneratePlaneError(lineno, 1);
      plane.param_degree = std::max(degree, 0);
      arr.planes[static_cast<size_t>(plane_count++)] = std::move(plane);
    } else {
      throw ParseError("unknown directive '" + kw + "'", lineno, 1);
    }
  }
  if (!field_set) throw ParseError("missing field line", lineno, 1);
  if (plane_count != 8)
    throw ParseError("expected 8 planes, got " + std::to_string(plane_count), lineno, 1);
  if (!arr.parametric) {
    for (const LinearForm& p : arr.planes)
      if (p.param_degree != 0) throw ParseError("parameters without 'params'", lineno, 1);
  }
  return arr;
}

std::string render_arrangement(const Arrangement& arr) {
  std::ostringstream os;
  if (arr.field.is_rational()) os << "field rational\n";
  else os << "field quad " << arr.field.d << "\n";
  if (arr.parametric) os << "params\n";
  if (!arr.label.empty()) os << "label " << arr.label << "\n";
  for (const LinearForm& p : arr.planes) {
    os << "plane";
    for (const BinForm& c : p.coeff) os << " " << render_form(c);
    os << "\n";
  }
  return os.str();
}

BinForm quad_minor(const Arrangement& arr, uint8_t quad) {
  std::array<std::array<BinForm, 4>, 4> m;
  int r = 0;
  for (int i = 0; i < 8; ++i) {
    if (!(quad & (1u << i))) continue;
    m[static_cast<size_t>(r++)] = arr.planes[static_cast<size_t>(i)].coeff;
  }
  if (r != 4) throw OcticError("quad_minor needs a quadruple");
  return det4(m);
}

std::vector<std::pair<uint8_t, BinForm>> all_minors(const Arrangement& arr) {
  std::vector<std::pair<uint8_t, BinForm>> out;
  out.reserve(70);
  int index = 0;
  for (uint8_t quad : subsets::all_quads()) {
    BinForm minor = quad_minor(arr, quad);
    if (index % 2 == 1) minor = -minor;
    out.emplace_back(quad, std::move(minor));
    ++index;
  }
  return out;
}

IncidenceTable incidence_table(const Arrangement& arr,
                               const std::optional<ParamPoint>& at) {
  std::vector<uint8_t> quads;
  if (!at) {
    for (uint8_t quad : subsets::all_quads())
      if (quad_minor(arr, quad).is_zero()) quads.push_back(quad);
  } else {
    ParamPoint point = *at;
    if (point.field() != arr.field && point.field().is_rational())
      point = ParamPoint(point.a.embed(arr.field), point.b.embed(arr.field));
    for (uint8_t quad : subsets::all_quads())
      if (eval_at(quad_minor(arr, quad), point).is_zero()) quads.push_back(quad);
  }
  return IncidenceTable(std::move(quads));
}

std::vector<std::array<Scalar, 4>> scalar_rows(const Arrangement& arr,
                                               const std::optional<ParamPoint>& at) {
  FieldDesc f = arr.field;
  std::optional<ParamPoint> point = at;
  if (arr.parametric && !point) throw MissingParameter();
  if (point && point->field() != f) {
    if (f.is_rational()) f = point->field();
    else if (!point->field().is_rational()) throw FieldMismatch();
    else point = ParamPoint(point->a.embed(f), point->b.embed(f));
  }
  std::vector<std::array<Scalar, 4>> rows;
  rows.reserve(8);
  for (const LinearForm& p : arr.planes) {
    std::array<Scalar, 4> row{Scalar::zero(f), Scalar::zero(f), Scalar::zero(f),
                              Scalar::zero(f)};
    for (int c = 0; c < 4; ++c) {
      const BinForm& coeff = p.coeff[static_cast<size_t>(c)];
      row[static_cast<size_t>(c)] =
          point ? coeff.eval(point->a, point->b) : coeff.coeff(0).embed(f);
    }
    rows.push_back(row);
  }
  return rows;
}

ValidityVerdict validate(const Arrangement& arr, const std::optional<ParamPoint>& at) {
  std::vector<std::array<Scalar, 4>> rows = scalar_rows(arr, at);
  ValidityVerdict verdict;
  auto add = [&](ValidityViolation::Kind kind, uint8_t planes) {
    verdict.violations.push_back({kind, planes});
  };

  std::array<bool, 8> degenerate{};
  for (int i = 0; i < 8; ++i) {
    bool zero = true;
    for (const Scalar& c : rows[static_cast<size_t>(i)])
      if (!c.is_zero()) zero = false;
    if (zero) {
      degenerate[static_cast<size_t>(i)] = true;
      add(ValidityViolation::Kind::DegeneratePlane, static_cast<uint8_t>(1u << i));
    }
  }
  auto pick = [&](uint8_t mask) {
    std::vector<std::array<Scalar, 4>> sub;
    for (int i = 0; i < 8; ++i)
      if (mask & (1u << i)) sub.push_back(rows[static_cast<size_t>(i)]);
    return sub;
  };
  auto clean = [&](uint8_t mask) {
    for (int i = 0; i < 8; ++i)
      if ((mask & (1u << i)) && degenerate[static_cast<size_t>(i)]) return false;
    return true;
  };

  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) {
      uint8_t mask = static_cast<uint8_t>((1u << i) | (1u << j));
      if (!clean(mask)) continue;
      if (matrix_rank(pick(mask)) < 2) add(ValidityViolation::Kind::DuplicatePlane, mask);
    }
  for (uint8_t quad : subsets::all_quads()) {
    if (!clean(quad)) continue;
    if (matrix_rank(pick(quad)) < 3) add(ValidityViolation::Kind::FourShareLine, quad);
  }
  for (uint8_t six : subsets::all_of_size(6)) {
    if (!clean(six)) continue;
    if (matrix_rank(pick(six)) < 4) add(ValidityViolation::Kind::SixSharePoint, six);
  }
  verdict.valid = verdict.violations.empty();
  return verdict;
}

Arrangement specialize(const Arrangement& arr, const ParamPoint& at) {
  return specialize(arr, at.a, at.b);
}

Arrangement specialize(const Arrangement& arr, const Scalar& a, const Scalar& b) {
  if (!arr.parametric) throw OcticError("specializing a non-parametric arrangement");
  FieldDesc f = arr.field;
  Scalar va = a, vb = b;
  if (a.field() != f) {
    if (f.is_rational()) {
      f = a.field();
    } else if (a.field().is_rational()) {
      va = a.embed(f);
      vb = b.embed(f);
    } else {
      throw FieldMismatch();
    }
  }
  Arrangement out;
  out.field = f;
  out.parametric = false;
  out.label = arr.label;
  for (int i = 0; i < 8; ++i) {
    for (int c = 0; c < 4; ++c)
      out.planes[static_cast<size_t>(i)].coeff[static_cast<size_t>(c)] =
          BinForm::constant(
              arr.planes[static_cast<size_t>(i)].coeff[static_cast<size_t>(c)].eval(va, vb));
    out.planes[static_cast<size_t>(i)].param_degree = 0;
  }
  return out;
}

Arrangement embed_arrangement(const Arrangement& arr, FieldDesc target) {
  Arrangement out = arr;
  out.field = target;
  for (LinearForm& p : out.planes)
    for (BinForm& c : p.coeff) c = c.embed(target);
  return out;
}

Arrangement conjugate_arrangement(const Arrangement& arr) {
  Arrangement out = arr;
  for (LinearForm& p : out.planes)
    for (BinForm& c : p.coeff) c = c.conjugate();
  return out;
}

Arrangement substitute_parameters(const Arrangement& arr, const BinForm& image_a,
                                  const BinForm& image_b) {
  if (!arr.parametric) throw OcticError("substituting into a non-parametric arrangement");
  Arrangement out = arr;
  for (LinearForm& p : out.planes)
    for (BinForm& c : p.coeff) c = c.substitute(image_a, image_b);
  return out;
}

}  // namespace octic
