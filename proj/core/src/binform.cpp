#include "octic/binform.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace octic {

namespace {

bool all_zero(const std::vector<Scalar>& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Scalar& c) { return c.is_zero(); });
}

}  // namespace

BinForm::BinForm(int degree, std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != degree + 1)
    throw OcticError("coefficient count does not match degree");
  const FieldDesc f = coeffs_[0].field();
  for (const Scalar& c : coeffs_)
    if (c.field() != f) throw FieldMismatch();
  if (all_zero(coeffs_)) coeffs_ = {Scalar::zero(f)};
}

BinForm BinForm::var_a(FieldDesc f) {
  return BinForm(1, {Scalar::one(f), Scalar::zero(f)});
}

BinForm BinForm::var_b(FieldDesc f) {
  return BinForm(1, {Scalar::zero(f), Scalar::one(f)});
}

bool BinForm::is_zero() const { return degree() == 0 && coeffs_[0].is_zero(); }

BinForm BinForm::operator+(const BinForm& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (degree() != o.degree()) throw DegreeMismatch();
  std::vector<Scalar> c;
  c.reserve(coeffs_.size());
  for (size_t k = 0; k < coeffs_.size(); ++k) c.push_back(coeffs_[k] + o.coeffs_[k]);
  return BinForm(degree(), std::move(c));
}

BinForm BinForm::operator-(const BinForm& o) const { return *this + (-o); }

BinForm BinForm::operator-() const {
  std::vector<Scalar> c;
  c.reserve(coeffs_.size());
  for (const Scalar& x : coeffs_) c.push_back(-x);
  return BinForm(degree(), std::move(c));
}

BinForm BinForm::operator*(const BinForm& o) const {
  if (field() != o.field()) throw FieldMismatch();
  if (is_zero() || o.is_zero()) return BinForm::zero(field());
  int d = degree() + o.degree();
  std::vector<Scalar> c(static_cast<size_t>(d) + 1, Scalar::zero(field()));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      c[i + j] = c[i + j] + coeffs_[i] * o.coeffs_[j];
  return BinForm(d, std::move(c));
}

BinForm BinForm::scale(const Scalar& c) const {
  if (c.is_zero()) return BinForm::zero(field());
  std::vector<Scalar> out;
  out.reserve(coeffs_.size());
  for (const Scalar& x : coeffs_) out.push_back(x * c);
  return BinForm(degree(), std::move(out));
}

bool BinForm::operator==(const BinForm& o) const {
  if (is_zero() && o.is_zero()) return true;
  if (degree() != o.degree()) return false;
  for (size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != o.coeffs_[k]) return false;
  return true;
}

Scalar BinForm::eval(const Scalar& a, const Scalar& b) const {
  const FieldDesc f = a.field();
  if (b.field() != f) throw FieldMismatch();
  const int d = degree();
  std::vector<Scalar> apow(static_cast<size_t>(d) + 1, Scalar::one(f));
  std::vector<Scalar> bpow(static_cast<size_t>(d) + 1, Scalar::one(f));
  for (int i = 1; i <= d; ++i) {
    apow[static_cast<size_t>(i)] = apow[static_cast<size_t>(i - 1)] * a;
    bpow[static_cast<size_t>(i)] = bpow[static_cast<size_t>(i - 1)] * b;
  }
  Scalar acc = Scalar::zero(f);
  for (int k = 0; k <= d; ++k)
    acc = acc + coeffs_[static_cast<size_t>(k)].embed(f) *
                    apow[static_cast<size_t>(d - k)] * bpow[static_cast<size_t>(k)];
  return acc;
}

BinForm BinForm::substitute(const BinForm& image_a, const BinForm& image_b) const {
  const FieldDesc f = field();
  if (is_zero()) return BinForm::zero(f);
  if (is_constant()) return *this;
  int d = degree();
  std::vector<BinForm> pa(static_cast<size_t>(d) + 1, BinForm::constant(Scalar::one(f)));
  std::vector<BinForm> pb(static_cast<size_t>(d) + 1, BinForm::constant(Scalar::one(f)));
  for (int i = 1; i <= d; ++i) {
    pa[static_cast<size_t>(i)] = pa[static_cast<size_t>(i - 1)] * image_a;
    pb[static_cast<size_t>(i)] = pb[static_cast<size_t>(i - 1)] * image_b;
  }
  BinForm acc = BinForm::zero(f);
  for (int k = 0; k <= d; ++k) {
    if (coeff(k).is_zero()) continue;
    BinForm term = pa[static_cast<size_t>(d - k)] * pb[static_cast<size_t>(k)];
    term = term.scale(coeff(k));
    acc = acc.is_zero() ? term : acc + term;
  }
  return acc;
}

BinForm BinForm::embed(FieldDesc target) const {
  std::vector<Scalar> c;
  c.reserve(coeffs_.size());
  for (const Scalar& x : coeffs_) c.push_back(x.embed(target));
  return BinForm(degree(), std::move(c));
}

BinForm BinForm::conjugate() const {
  std::vector<Scalar> c;
  c.reserve(coeffs_.size());
  for (const Scalar& x : coeffs_) c.push_back(x.conjugate());
  return BinForm(degree(), std::move(c));
}

std::string BinForm::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  int d = degree();
  for (int k = 0; k <= d; ++k) {
    const Scalar& c = coeff(k);
    if (c.is_zero()) continue;
    std::string cs = c.str();
    if (!first) os << (cs[0] == '-' ? " - " : " + ");
    if (!first && cs[0] == '-') cs = cs.substr(1);
    first = false;
    int ea = d - k, eb = k;
    bool unit = (cs == "1");
    bool neg_unit = (cs == "-1");
    if (ea == 0 && eb == 0) {
      os << cs;
      continue;
    }
    if (neg_unit) os << "-";
    else if (!unit) os << (cs.find_first_of("+-", 1) != std::string::npos
                               ? "(" + cs + ")" : cs) << "*";
    if (ea > 0) {
      os << "A";
      if (ea > 1) os << "^" << ea;
      if (eb > 0) os << "*";
    }
    if (eb > 0) {
      os << "B";
      if (eb > 1) os << "^" << eb;
    }
  }
  return os.str();
}

ParamPoint::ParamPoint(Scalar a_, Scalar b_) : a(std::move(a_)), b(std::move(b_)) {
  if (a.field() != b.field()) throw FieldMismatch();
  if (a.is_zero() && b.is_zero()) throw OcticError("parameter point (0:0)");
  if (!b.is_zero()) {
    a = a / b;
    b = Scalar::one(a.field());
  } else {
    a = Scalar::one(a.field());
  }
}

ParamPoint ParamPoint::infinity(FieldDesc f) {
  return ParamPoint(Scalar::one(f), Scalar::zero(f));
}

ParamPoint ParamPoint::affine(Scalar value) {
  Scalar one = Scalar::one(value.field());
  return ParamPoint(std::move(value), std::move(one));
}

std::string ParamPoint::str() const {
  if (is_infinity()) return "inf";
  return a.str();
}

Scalar eval_at(const BinForm& f, const ParamPoint& at) {
  return f.eval(at.a, at.b);
}

namespace {

BinForm det_n(const std::vector<std::vector<BinForm>>& m) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  const FieldDesc f = m[0][0].field();
  BinForm acc = BinForm::zero(f);
  for (size_t i = 0; i < n; ++i) {
    if (m[i][0].is_zero()) continue;
    std::vector<std::vector<BinForm>> sub;
    sub.reserve(n - 1);
    for (size_t r = 0; r < n; ++r) {
      if (r == i) continue;
      std::vector<BinForm> row(m[r].begin() + 1, m[r].end());
      sub.push_back(std::move(row));
    }
    BinForm term = m[i][0] * det_n(sub);
    if (i % 2 == 1) term = -term;
    acc = acc.is_zero() ? term : (term.is_zero() ? acc : acc + term);
  }
  return acc;
}

}  // namespace

BinForm det4(const std::array<std::array<BinForm, 4>, 4>& m) {
  std::vector<std::vector<BinForm>> rows(4, std::vector<BinForm>());
  for (int r = 0; r < 4; ++r)
    rows[static_cast<size_t>(r)] = {m[static_cast<size_t>(r)][0], m[static_cast<size_t>(r)][1],
                                    m[static_cast<size_t>(r)][2], m[static_cast<size_t>(r)][3]};
  return det_n(rows);
}

int matrix_rank(const std::vector<std::array<Scalar, 4>>& rows) {
  if (rows.empty()) return 0;
  std::vector<std::array<Scalar, 4>> m = rows;
  size_t nrows = m.size();
  int rank = 0;
  size_t pivot_row = 0;
  for (int col = 0; col < 4 && pivot_row < nrows; ++col) {
    size_t sel = pivot_row;
    while (sel < nrows && m[sel][static_cast<size_t>(col)].is_zero()) ++sel;
    if (sel == nrows) continue;
    std::swap(m[sel], m[pivot_row]);
    const Scalar inv = m[pivot_row][static_cast<size_t>(col)].inverse();
    for (size_t r = pivot_row + 1; r < nrows; ++r) {
      if (m[r][static_cast<size_t>(col)].is_zero()) continue;
      Scalar factor = m[r][static_cast<size_t>(col)] * inv;
      for (int c = col; c < 4; ++c)
        m[r][static_cast<size_t>(c)] =
            m[r][static_cast<size_t>(c)] - factor * m[pivot_row][static_cast<size_t>(c)];
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

// ---------------------------------------------------------------------------
// Factorization of binary forms.

namespace {

// Univariate polynomial, coefficients ascending by power.
using Poly = std::vector<Scalar>;

Poly trim(Poly p) {
  while (p.size() > 1 && p.back().is_zero()) p.pop_back();
  return p;
}

int pdeg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Scalar peval(const Poly& p, const Scalar& x) {
  Scalar acc = Scalar::zero(x.field());
  for (size_t k = p.size(); k-- > 0;) acc = acc * x + p[k].embed(x.field());
  return acc;
}

// Synthetic division by (t - r); the remainder must vanish.
Poly deflate(const Poly& p, const Scalar& r) {
  Poly out(p.size() - 1, Scalar::zero(r.field()));
  Scalar acc = Scalar::zero(r.field());
  for (size_t k = p.size(); k-- > 1;) {
    acc = (k == p.size() - 1) ? p[k] : p[k] + r * acc;
    out[k - 1] = acc;
  }
  return out;
}

std::vector<Int> divisors_of(Int n) {
  if (n < 0) n = -n;
  std::vector<Int> divs;
  if (n == 0) return divs;
  std::map<Int, int> fac;
  Int rest = n;
  for (Int p = 2; p * p <= rest; ++p) {
    while (rest % p == 0) {
      ++fac[p];
      rest /= p;
    }
  }
  if (rest > 1) ++fac[rest];
  divs.push_back(1);
  for (auto& [p, mult] : fac) {
    size_t base = divs.size();
    Int pk = 1;
    for (int e = 1; e <= mult; ++e) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// Rational root candidates u/v from integer-cleared constant and leading
// coefficients of p (over the rationals).
std::vector<Rational> rational_candidates(const Poly& p) {
  Int lcm_den = 1;
  for (const Scalar& c : p) {
    Int den = denominator(c.a());
    lcm_den = lcm(lcm_den, den);
  }
  Int a0 = numerator(p.front().a() * Rational(lcm_den));
  Int an = numerator(p.back().a() * Rational(lcm_den));
  std::vector<Rational> out;
  for (const Int& u : divisors_of(a0))
    for (const Int& v : divisors_of(an)) {
      Rational r(u, v);
      out.push_back(r);
      out.push_back(-r);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Extract base-field roots found among candidate scalars; deflates p.
void extract_roots(Poly& p, const std::vector<Scalar>& candidates,
                   std::vector<std::pair<ParamPoint, int>>& out) {
  for (const Scalar& r : candidates) {
    int mult = 0;
    while (pdeg(p) >= 1 && peval(p, r).is_zero()) {
      p = deflate(p, r);
      ++mult;
    }
    if (mult > 0) out.emplace_back(ParamPoint::affine(r), mult);
  }
}

struct QuadFactor {
  Scalar p, q;  // t^2 + p t + q
};

// Resolve a monic quadratic remainder into base-field roots or an
// irreducible descriptor.
void handle_quadratic(const Scalar& P, const Scalar& Q,
                      int multiplicity,
                      std::vector<std::pair<ParamPoint, int>>& linear_out,
                      std::vector<QuadraticRoot>& quad_out) {
  FieldDesc f = P.field();
  Scalar disc = P * P - Scalar(Rational(4), f) * Q;
  if (auto root = is_square(disc)) {
    Scalar two = Scalar(Rational(2), f);
    Scalar r1 = (-P + *root) / two;
    Scalar r2 = (-P - *root) / two;
    linear_out.emplace_back(ParamPoint::affine(r1), multiplicity);
    if (r2 != r1) linear_out.emplace_back(ParamPoint::affine(r2), multiplicity);
    else linear_out.back().second *= 2;
    return;
  }
  QuadraticRoot qr;
  qr.p = P;
  qr.q = Q;
  qr.multiplicity = multiplicity;
  if (f.is_rational()) {
    // disc = n/m, sqrt(disc) = s*sqrt(e)/m with n*m = e*s^2.
    Int n = numerator(disc.a());
    Int m = denominator(disc.a());
    Int e = squarefree_part(n * m);
    Rational s2 = Rational(n * m) / Rational(e);
    auto s = rational_sqrt(s2);
    FieldDesc ext = FieldDesc::quadratic(e);
    qr.e = e;
    Scalar sqrt_disc(Rational(0), *s / Rational(m), ext);
    Scalar two(Rational(2), ext);
    Scalar mp(-P.a(), ext);
    qr.roots = {(mp + sqrt_disc) / two, (mp - sqrt_disc) / two};
  }
  quad_out.push_back(std::move(qr));
}

// Try to split a monic quartic into two monic rational quadratics via
// rational roots of the resolvent cubic.  Base field must be rational.
std::optional<std::pair<QuadFactor, QuadFactor>> split_quartic(const Poly& poly) {
  FieldDesc f = poly[0].field();
  const Scalar& s = poly[0];
  const Scalar& r = poly[1];
  const Scalar& q = poly[2];
  const Scalar& p = poly[3];
  Scalar four(Rational(4), f);
  // y^3 - q y^2 + (pr - 4s) y - (p^2 s - 4 q s + r^2)
  Poly resolvent = {-(p * p * s - four * q * s + r * r), p * r - four * s, -q,
                    Scalar::one(f)};
  for (const Rational& cand : rational_candidates(trim(resolvent))) {
    Scalar y(cand, f);
    if (!peval(resolvent, y).is_zero()) continue;
    // a + c = p, ac = q - y
    Scalar disc_a = p * p - four * (q - y);
    auto root_a = is_square(disc_a);
    if (!root_a) continue;
    Scalar two(Rational(2), f);
    Scalar a = (p + *root_a) / two;
    Scalar c = p - a;
    Scalar b(Rational(0), f), d(Rational(0), f);
    if (a != c) {
      b = (r - a * y) / (c - a);
      d = y - b;
    } else {
      // b + d = y, b d = s
      Scalar disc_b = y * y - four * s;
      auto root_b = is_square(disc_b);
      if (!root_b) continue;
      b = (y + *root_b) / two;
      d = y - b;
      if (a * y != r) continue;
    }
    if (b * d != s) continue;
    if (a * d + b * c != r) continue;
    return std::make_pair(QuadFactor{a, b}, QuadFactor{c, d});
  }
  return std::nullopt;
}

BinForm homogenize(const Poly& p, FieldDesc f) {
  // p(t) with t = A/B, degree d -> sum p_j A^j B^(d-j); BinForm coeff(k)
  // multiplies A^(d-k) B^k, so coeff(k) = p[d-k].
  int d = pdeg(p);
  std::vector<Scalar> coeffs(static_cast<size_t>(d) + 1, Scalar::zero(f));
  for (int k = 0; k <= d; ++k) coeffs[static_cast<size_t>(k)] = p[static_cast<size_t>(d - k)];
  return BinForm(d, std::move(coeffs));
}

}  // namespace

BinForm RootReport::reconstruct(FieldDesc f) const {
  BinForm acc = BinForm::constant(leading.embed(f));
  for (const auto& [pt, mult] : rational_roots) {
    std::vector<Scalar> c = {pt.b.embed(f), -(pt.a.embed(f))};
    BinForm lin(1, std::move(c));
    for (int i = 0; i < mult; ++i) acc = acc * lin;
  }
  for (const QuadraticRoot& qr : quadratic_roots) {
    BinForm quad(2, {Scalar::one(f), qr.p.embed(f), qr.q.embed(f)});
    for (int i = 0; i < qr.multiplicity; ++i) acc = acc * quad;
  }
  for (const BinForm& u : unresolved) acc = acc * u;
  return acc;
}

RootReport factor_binform(const BinForm& f) {
  if (f.is_zero()) throw ZeroFormError();
  const FieldDesc field = f.field();
  RootReport report;
  report.leading = Scalar::one(field);

  int d = f.degree();
  int lead_zeros = 0;
  while (lead_zeros <= d && f.coeff(lead_zeros).is_zero()) ++lead_zeros;
  int trail_zeros = 0;
  while (trail_zeros <= d && f.coeff(d - trail_zeros).is_zero()) ++trail_zeros;
  // Leading zero coefficients are powers of B, i.e. root at infinity (1:0);
  // trailing zeros are powers of A, i.e. root 0 = (0:1).
  if (lead_zeros > 0)
    report.rational_roots.emplace_back(ParamPoint::infinity(field), lead_zeros);
  if (trail_zeros > 0)
    report.rational_roots.emplace_back(
        ParamPoint(Scalar::zero(field), Scalar::one(field)), trail_zeros);

  // Dehomogenize the remaining part to p(t), t = A/B, ascending powers.
  int dd = d - lead_zeros - trail_zeros;
  Poly p(static_cast<size_t>(dd) + 1, Scalar::zero(field));
  for (int j = 0; j <= dd; ++j) p[static_cast<size_t>(j)] = f.coeff(d - trail_zeros - j);

  // The sign of (b*A - a*B) factors and the overall scaling land here.
  // Root at infinity contributes factor -B per multiplicity.
  if (lead_zeros % 2 == 1) report.leading = -report.leading;

  if (dd > 0) {
    // Base-field root search by divisor candidates (over a quadratic base
    // the candidates come from the rational norm polynomial).
    std::vector<Scalar> candidates;
    if (field.is_rational()) {
      for (const Rational& r : rational_candidates(p)) candidates.emplace_back(r, field);
    } else {
      Poly conj(p.size(), Scalar::zero(field));
      for (size_t k = 0; k < p.size(); ++k) conj[k] = p[k].conjugate();
      // norm polynomial has rational coefficients
      Poly norm(p.size() * 2 - 1, Scalar::zero(field));
      for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < conj.size(); ++j)
          norm[i + j] = norm[i + j] + p[i] * conj[j];
      Poly norm_q;
      norm_q.reserve(norm.size());
      for (const Scalar& c : norm) norm_q.emplace_back(c.a(), FieldDesc{});
      for (const Rational& r : rational_candidates(trim(norm_q)))
        candidates.emplace_back(r, Rational(0), field);
    }
    extract_roots(p, candidates, report.rational_roots);

    // Normalize the remainder monic, absorbing the unit.
    if (!(p.size() == 1 && p[0].is_zero()) && !p.back().is_one()) {
      Scalar lead = p.back();
      report.leading = report.leading * lead;
      Scalar inv = lead.inverse();
      for (Scalar& c : p) c = c * inv;
    }

    switch (pdeg(p)) {
      case 0:
        report.leading = report.leading * p[0];
        break;
      case 1:
        report.rational_roots.emplace_back(ParamPoint::affine(-p[0]), 1);
        break;
      case 2:
        handle_quadratic(p[1], p[0], 1, report.rational_roots, report.quadratic_roots);
        break;
      case 4: {
        if (field.is_rational()) {
          if (auto split = split_quartic(p)) {
            const auto& [f1, f2] = *split;
            if (f1.p == f2.p && f1.q == f2.q) {
              handle_quadratic(f1.p, f1.q, 2, report.rational_roots,
                               report.quadratic_roots);
            } else {
              handle_quadratic(f1.p, f1.q, 1, report.rational_roots,
                               report.quadratic_roots);
              handle_quadratic(f2.p, f2.q, 1, report.rational_roots,
                               report.quadratic_roots);
            }
            break;
          }
        }
        report.unresolved.push_back(homogenize(p, field));
        break;
      }
      default:
        report.unresolved.push_back(homogenize(p, field));
        break;
    }
  } else {
    report.leading = report.leading * p[0];
  }

  // Merge duplicate linear roots and quadratic factors.
  std::vector<std::pair<ParamPoint, int>> merged;
  for (auto& [pt, mult] : report.rational_roots) {
    bool found = false;
    for (auto& [mp, mm] : merged)
      if (mp == pt) {
        mm += mult;
        found = true;
        break;
      }
    if (!found) merged.emplace_back(pt, mult);
  }
  report.rational_roots = std::move(merged);
  std::vector<QuadraticRoot> qmerged;
  for (auto& qr : report.quadratic_roots) {
    bool found = false;
    for (auto& mq : qmerged)
      if (mq.p == qr.p && mq.q == qr.q) {
        mq.multiplicity += qr.multiplicity;
        found = true;
        break;
      }
    if (!found) qmerged.push_back(qr);
  }
  report.quadratic_roots = std::move(qmerged);
  return report;
}

}  // namespace octic
