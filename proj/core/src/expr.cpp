#include "octic/expr.hpp"

#include <cctype>
#include <sstream>

#include "octic/errors.hpp"

namespace octic {

BinForm FormRatio::as_form() const {
  if (!den.is_constant()) throw OcticError("expression is not a polynomial form");
  if (den.coeff(0).is_zero()) throw DivisionByZero();
  return num.scale(den.coeff(0).inverse());
}

namespace {

struct Parser {
  const std::string& text;
  const FieldDesc& field;
  bool allow_params;
  int line;
  int column0;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line, column0 + static_cast<int>(pos) + 1);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  FormRatio ratio_of(BinForm f) {
    return FormRatio{std::move(f), BinForm::constant(Scalar::one(field))};
  }

  FormRatio add(const FormRatio& x, const FormRatio& y, bool subtract) {
    BinForm lhs = x.num * y.den;
    BinForm rhs = y.num * x.den;
    BinForm num = subtract ? (lhs - rhs) : (lhs + rhs);
    return FormRatio{std::move(num), x.den * y.den};
  }

  FormRatio mul(const FormRatio& x, const FormRatio& y) {
    return FormRatio{x.num * y.num, x.den * y.den};
  }

  FormRatio div(const FormRatio& x, const FormRatio& y) {
    if (y.num.is_zero()) fail("division by zero");
    return FormRatio{x.num * y.den, x.den * y.num};
  }

  FormRatio parse_expr() {
    bool neg = eat('-');
    FormRatio acc = parse_term();
    if (neg) acc.num = -acc.num;
    while (true) {
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos;
        FormRatio t = parse_term();
        acc = add(acc, t, c == '-');
      } else {
        break;
      }
    }
    return acc;
  }

  FormRatio parse_term() {
    FormRatio acc = parse_factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos;
        acc = mul(acc, parse_factor());
      } else if (c == '/') {
        ++pos;
        acc = div(acc, parse_factor());
      } else {
        break;
      }
    }
    return acc;
  }

  FormRatio parse_factor() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of expression");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      FormRatio inner = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {  // unary minus inside a factor, e.g. (-1)
      ++pos;
      FormRatio f = parse_factor();
      f.num = -f.num;
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      Int value(text.substr(start, pos - start));
      return ratio_of(BinForm::constant(Scalar(Rational(value), field)));
    }
    if (c == 's') {
      if (field.is_rational()) {
        throw FieldMismatch("'s' used in a rational-field expression");
      }
      ++pos;
      return ratio_of(BinForm::constant(Scalar::root(field)));
    }
    if (c == 'A' || c == 'B') {
      if (!allow_params)
        fail("parameter used in a non-parametric context");
      ++pos;
      return ratio_of(c == 'A' ? BinForm::var_a(field) : BinForm::var_b(field));
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

FormRatio parse_form_ratio(const std::string& text, const FieldDesc& field,
                           bool allow_params, int line, int column0) {
  Parser parser{text, field, allow_params, line, column0};
  FormRatio result = parser.parse_expr();
  parser.skip_ws();
  if (parser.pos != text.size()) parser.fail("trailing characters");
  return result;
}

BinForm parse_form(const std::string& text, const FieldDesc& field,
                   bool allow_params, int line, int column0) {
  FormRatio r = parse_form_ratio(text, field, allow_params, line, column0);
  if (!r.is_form())
    throw ParseError("expression is a ratio, expected a polynomial", line,
                     column0 + 1);
  return r.as_form();
}

Scalar parse_scalar_expr(const std::string& text, const FieldDesc& field,
                         int line, int column0) {
  BinForm f = parse_form(text, field, false, line, column0);
  return f.coeff(0);
}

std::string render_form(const BinForm& f) {
  if (f.is_zero()) return "0";
  auto scalar_str = [](const Scalar& c) {
    std::string s = c.str();
    bool compound = s.find_first_of("+-", 1) != std::string::npos;
    return compound ? "(" + s + ")" : s;
  };
  if (f.is_constant()) {
    std::string s = f.coeff(0).str();
    return s;
  }
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= f.degree(); ++k) {
    const Scalar& c = f.coeff(k);
    if (c.is_zero()) continue;
    if (!first) os << "+";
    first = false;
    os << scalar_str(c);
    for (int i = 0; i < f.degree() - k; ++i) os << "*A";
    for (int i = 0; i < k; ++i) os << "*B";
  }
  return os.str();
}

}  // namespace octic
