#include "octic/family.hpp"

#include <algorithm>

#include "octic/errors.hpp"

namespace octic {

std::string SpecialValue::str() const {
  std::string head = at.str();
  switch (kind) {
    case Kind::NonCY: {
      std::string v;
      for (const auto& violation : violations) {
        if (!v.empty()) v += ",";
        v += violation.str();
      }
      return head + ": non-CY [" + v + "]";
    }
    case Kind::Known:
      return head + ": Arr " + corpus_label;
    case Kind::UnknownOctic:
      return head + ": octic (not in corpus)";
  }
  return head;
}

namespace {

// Deterministic order for special values: infinity first, then by field
// (rationals before extensions), then coordinates.
bool value_less(const SpecialValue& x, const SpecialValue& y) {
  if (x.at.is_infinity() != y.at.is_infinity()) return x.at.is_infinity();
  if (x.field.d != y.field.d) return x.field.d < y.field.d;
  if (x.at.a.a() != y.at.a.a()) return x.at.a.a() < y.at.a.a();
  return x.at.a.b() < y.at.a.b();
}

void classify(SpecialValue& value, const Arrangement& member,
              const CanonicalLookup& lookup) {
  ValidityVerdict verdict = validate(member);
  if (!verdict.valid) {
    value.kind = SpecialValue::Kind::NonCY;
    value.violations = verdict.violations;
    return;
  }
  IncidenceTable table = incidence_table(member);
  CanonicalForm canon = canonical_form(table);
  value.canonical = canon.minimal;
  if (lookup) {
    if (auto hit = lookup(canon.minimal)) {
      value.kind = SpecialValue::Kind::Known;
      value.corpus_label = hit->label;
      // send the member's table onto the corpus table
      value.witness = canon.witness.then(hit->corpus_witness.inverse());
      return;
    }
  }
  value.kind = SpecialValue::Kind::UnknownOctic;
}

}  // namespace

SpecialValuesReport special_values(const Arrangement& family,
                                   const CanonicalLookup& lookup) {
  if (!family.parametric) throw OcticError("special_values needs a parametric family");
  SpecialValuesReport report;

  std::vector<std::pair<FieldDesc, ParamPoint>> points;
  auto add_point = [&](const FieldDesc& f, const ParamPoint& pt) {
    for (const auto& [g, q] : points)
      if (g == f && q == pt) return;
    points.emplace_back(f, pt);
  };

  for (uint8_t quad : subsets::all_quads()) {
    BinForm minor = quad_minor(family, quad);
    if (minor.is_zero() || minor.is_constant()) continue;
    RootReport roots = factor_binform(minor);
    for (const auto& [pt, mult] : roots.rational_roots) add_point(family.field, pt);
    for (const QuadraticRoot& qr : roots.quadratic_roots) {
      if (qr.roots.empty()) {
        report.unresolved.push_back(
            BinForm(2, {Scalar::one(family.field), qr.p, qr.q}));
        continue;
      }
      for (const Scalar& root : qr.roots)
        add_point(root.field(), ParamPoint::affine(root));
    }
    for (const BinForm& u : roots.unresolved) report.unresolved.push_back(u);
  }

  for (const auto& [field, pt] : points) {
    SpecialValue value;
    value.field = field;
    value.at = pt;
    classify(value, specialize(family, pt), lookup);
    report.values.push_back(std::move(value));
  }
  std::sort(report.values.begin(), report.values.end(), value_less);
  return report;
}

// ---------------------------------------------------------------------------
// Projective equivalence.

namespace {

using Row = std::array<Scalar, 4>;

// Solve the 4x4 system with columns u1..u4, right-hand side rhs.
std::optional<std::array<Scalar, 4>> solve4(const std::array<Row, 4>& cols, const Row& rhs) {
  const FieldDesc f = rhs[0].field();
  // augmented matrix rows: 4 equations
  std::array<std::array<Scalar, 5>, 4> m;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c)
      m[static_cast<size_t>(r)][static_cast<size_t>(c)] =
          cols[static_cast<size_t>(c)][static_cast<size_t>(r)];
    m[static_cast<size_t>(r)][4] = rhs[static_cast<size_t>(r)];
  }
  for (int col = 0; col < 4; ++col) {
    int pivot = -1;
    for (int r = col; r < 4; ++r)
      if (!m[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    std::swap(m[static_cast<size_t>(col)], m[static_cast<size_t>(pivot)]);
    Scalar inv = m[static_cast<size_t>(col)][static_cast<size_t>(col)].inverse();
    for (int c = col; c < 5; ++c)
      m[static_cast<size_t>(col)][static_cast<size_t>(c)] =
          m[static_cast<size_t>(col)][static_cast<size_t>(c)] * inv;
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      Scalar factor = m[static_cast<size_t>(r)][static_cast<size_t>(col)];
      if (factor.is_zero()) continue;
      for (int c = col; c < 5; ++c)
        m[static_cast<size_t>(r)][static_cast<size_t>(c)] =
            m[static_cast<size_t>(r)][static_cast<size_t>(c)] -
            factor * m[static_cast<size_t>(col)][static_cast<size_t>(c)];
    }
  }
  std::array<Scalar, 4> x{Scalar::zero(f), Scalar::zero(f), Scalar::zero(f),
                          Scalar::zero(f)};
  for (int r = 0; r < 4; ++r) x[static_cast<size_t>(r)] = m[static_cast<size_t>(r)][4];
  return x;
}

std::optional<Scalar> proportionality(const Row& value, const Row& reference) {
  const FieldDesc f = value[0].field();
  std::optional<Scalar> ratio;
  for (int i = 0; i < 4; ++i) {
    const Scalar& v = value[static_cast<size_t>(i)];
    const Scalar& r = reference[static_cast<size_t>(i)];
    if (r.is_zero()) {
      if (!v.is_zero()) return std::nullopt;
      continue;
    }
    Scalar q = v / r;
    if (ratio && !(q == *ratio)) return std::nullopt;
    ratio = q;
  }
  if (!ratio || ratio->is_zero()) return std::nullopt;
  (void)f;
  return ratio;
}

// First five planes of `a` with no four concurrent.
std::vector<int> general_position_quintuple(const IncidenceTable& table) {
  for (uint8_t five : subsets::all_of_size(5)) {
    bool good = true;
    for (uint8_t quad : table.quads())
      if ((quad & five) == quad) {
        good = false;
        break;
      }
    if (good) {
      std::vector<int> out;
      for (int i = 0; i < 8; ++i)
        if (five & (1u << i)) out.push_back(i + 1);
      return out;
    }
  }
  throw NoGeneralPositionQuintuple();
}

std::optional<EquivalenceWitness> try_sigma(const std::vector<Row>& rows_a,
                                            const std::vector<Row>& rows_b,
                                            const std::vector<int>& quint,
                                            const Perm& sigma) {
  const FieldDesc f = rows_a[0][0].field();
  // N c^b_{sigma(i)} = lambda_i c^a_i ; pin N from the five-plane frame.
  std::array<Row, 4> u_cols, w_cols;
  for (int k = 0; k < 4; ++k) {
    u_cols[static_cast<size_t>(k)] =
        rows_b[static_cast<size_t>(sigma(quint[static_cast<size_t>(k)]) - 1)];
    w_cols[static_cast<size_t>(k)] = rows_a[static_cast<size_t>(quint[static_cast<size_t>(k)] - 1)];
  }
  const Row& u5 = rows_b[static_cast<size_t>(sigma(quint[4]) - 1)];
  const Row& w5 = rows_a[static_cast<size_t>(quint[4] - 1)];
  auto alpha = solve4(u_cols, u5);
  auto beta = solve4(w_cols, w5);
  if (!alpha || !beta) return std::nullopt;
  for (int k = 0; k < 4; ++k)
    if ((*alpha)[static_cast<size_t>(k)].is_zero() || (*beta)[static_cast<size_t>(k)].is_zero())
      return std::nullopt;

  // N maps u_k to (beta_k/alpha_k) w_k; assemble N = W' U^{-1} by solving
  // N U = W' column-wise, i.e. U^T N^T = W'^T.
  std::array<Row, 4> scaled_w;
  for (int k = 0; k < 4; ++k) {
    Scalar s = (*beta)[static_cast<size_t>(k)] / (*alpha)[static_cast<size_t>(k)];
    for (int r = 0; r < 4; ++r)
      scaled_w[static_cast<size_t>(k)][static_cast<size_t>(r)] =
          w_cols[static_cast<size_t>(k)][static_cast<size_t>(r)] * s;
  }
  // Solve for each row vector n_r of N: n_r . u_k = scaled_w[k][r].
  std::array<Row, 4> u_rows;  // treating u_k as equations' coefficient rows
  for (int k = 0; k < 4; ++k) u_rows[static_cast<size_t>(k)] = u_cols[static_cast<size_t>(k)];
  std::array<std::array<Scalar, 4>, 4> n;
  for (int r = 0; r < 4; ++r) {
    Row rhs{Scalar::zero(f), Scalar::zero(f), Scalar::zero(f), Scalar::zero(f)};
    for (int k = 0; k < 4; ++k) rhs[static_cast<size_t>(k)] = scaled_w[static_cast<size_t>(k)][static_cast<size_t>(r)];
    // u_rows as columns of the transposed system:
    std::array<Row, 4> cols;
    for (int c = 0; c < 4; ++c)
      for (int k = 0; k < 4; ++k)
        cols[static_cast<size_t>(c)][static_cast<size_t>(k)] = u_rows[static_cast<size_t>(k)][static_cast<size_t>(c)];
    auto sol = solve4(cols, rhs);
    if (!sol) return std::nullopt;
    n[static_cast<size_t>(r)] = *sol;
  }

  auto apply_n = [&](const Row& v) {
    Row out{Scalar::zero(f), Scalar::zero(f), Scalar::zero(f), Scalar::zero(f)};
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        out[static_cast<size_t>(r)] =
            out[static_cast<size_t>(r)] + n[static_cast<size_t>(r)][static_cast<size_t>(c)] * v[static_cast<size_t>(c)];
    return out;
  };

  EquivalenceWitness witness;
  witness.sigma = sigma;
  Scalar cover = Scalar::one(f);
  for (int i = 1; i <= 8; ++i) {
    Row image = apply_n(rows_b[static_cast<size_t>(sigma(i) - 1)]);
    auto lambda = proportionality(image, rows_a[static_cast<size_t>(i - 1)]);
    if (!lambda) return std::nullopt;
    witness.scales[static_cast<size_t>(i - 1)] = *lambda;
    cover = cover * *lambda;
  }
  witness.cover_scalar = cover;
  // matrix M with f^b_{sigma(i)}(M v) = lambda_i f^a_i(v): M = N^T.
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      witness.matrix[static_cast<size_t>(r)][static_cast<size_t>(c)] = n[static_cast<size_t>(c)][static_cast<size_t>(r)];
  return witness;
}

struct EquivalenceContext {
  std::vector<Row> rows_a, rows_b;
  std::vector<int> quint;
  std::vector<Perm> sigmas;
};

EquivalenceContext equivalence_context(const Arrangement& a_in, const Arrangement& b_in,
                                       const std::optional<Perm>& sigma) {
  if (a_in.parametric || b_in.parametric)
    throw OcticError("projective equivalence needs specialized arrangements");
  Arrangement a = a_in, b = b_in;
  if (a.field != b.field) {
    if (a.field.is_rational()) a = embed_arrangement(a, b.field);
    else if (b.field.is_rational()) b = embed_arrangement(b, a.field);
    else throw FieldMismatch();
  }
  EquivalenceContext ctx;
  ctx.rows_a = scalar_rows(a);
  ctx.rows_b = scalar_rows(b);

  IncidenceTable ta = incidence_table(a);
  IncidenceTable tb = incidence_table(b);
  ctx.quint = general_position_quintuple(ta);
  if (sigma) {
    if (ta.relabel(*sigma) == tb) ctx.sigmas = {*sigma};
    return ctx;
  }
  CanonicalForm ca = canonical_form(ta);
  CanonicalForm cb = canonical_form(tb);
  if (!(ca.minimal == cb.minimal)) return ctx;
  SymmetryGroup stab = symmetry_group(ca.minimal);
  Perm wb_inv = cb.witness.inverse();
  for (const Perm& rho : stab.elements)
    ctx.sigmas.push_back(ca.witness.then(rho).then(wb_inv));
  std::sort(ctx.sigmas.begin(), ctx.sigmas.end());
  return ctx;
}

}  // namespace

std::optional<EquivalenceWitness> projective_equivalence(const Arrangement& a,
                                                         const Arrangement& b,
                                                         std::optional<Perm> sigma) {
  EquivalenceContext ctx = equivalence_context(a, b, sigma);
  for (const Perm& s : ctx.sigmas)
    if (auto witness = try_sigma(ctx.rows_a, ctx.rows_b, ctx.quint, s)) return witness;
  return std::nullopt;
}

std::vector<EquivalenceWitness> all_equivalences(const Arrangement& a,
                                                 const Arrangement& b) {
  EquivalenceContext ctx = equivalence_context(a, b, std::nullopt);
  std::vector<EquivalenceWitness> out;
  for (const Perm& s : ctx.sigmas)
    if (auto witness = try_sigma(ctx.rows_a, ctx.rows_b, ctx.quint, s))
      out.push_back(std::move(*witness));
  return out;
}

// ---------------------------------------------------------------------------
// Parameter self-maps.

ParamPoint ParameterMapClaim::apply(const ParamPoint& t) const {
  return ParamPoint(image_a.eval(t.a, t.b), image_b.eval(t.a, t.b));
}

std::string ParameterMapClaim::str() const {
  return "(" + image_a.str() + "," + image_b.str() + ")";
}

namespace {

bool is_special_point(const Arrangement& family, const ParamPoint& t) {
  for (uint8_t quad : subsets::all_quads()) {
    BinForm minor = quad_minor(family, quad);
    if (minor.is_zero() || minor.is_constant()) continue;
    if (eval_at(minor, t).is_zero()) return true;
  }
  return false;
}

}  // namespace

std::vector<ParamPoint> default_samples(const Arrangement& family,
                                        const ParameterMapClaim& claim, int count) {
  static const std::vector<std::pair<int, int>> pool = {
      {2, 1}, {3, 1}, {5, 2}, {7, 2}, {11, 3}, {13, 5}, {17, 4}, {19, 7}, {23, 9}};
  std::vector<ParamPoint> out;
  FieldDesc f = family.field;
  for (const auto& [p, q] : pool) {
    if (static_cast<int>(out.size()) == count) break;
    ParamPoint t(Scalar(Rational(p), f), Scalar(Rational(q), f));
    if (is_special_point(family, t)) continue;
    ParamPoint image = claim.apply(t);
    if (is_special_point(family, image)) continue;
    out.push_back(t);
  }
  if (static_cast<int>(out.size()) < count)
    throw SampleIsSpecial("could not find enough non-special samples");
  return out;
}

ParameterMapReport verify_parameter_map(const Arrangement& family,
                                        const ParameterMapClaim& claim,
                                        const std::vector<ParamPoint>& samples) {
  if (samples.size() < 3) throw OcticError("need at least 3 samples");
  ParameterMapReport report;
  report.all_equivalent = true;

  // At generic samples both members carry the family's generic table, so
  // the candidate relabelings are its stabilizer, shared by every sample.
  std::vector<Perm> candidates = symmetry_group(incidence_table(family)).elements;

  // cover[s][k]: cover scalar of the sigma_k witness at sample s (absent if
  // that relabeling admits no witness there).
  std::vector<std::vector<std::optional<Scalar>>> cover;

  for (const ParamPoint& t : samples) {
    if (is_special_point(family, t)) throw SampleIsSpecial("sample " + t.str());
    ParamPoint image = claim.apply(t);
    if (is_special_point(family, image))
      throw SampleIsSpecial("image " + image.str() + " of sample " + t.str());
    SampleVerdict verdict;
    verdict.at = t;
    verdict.image = image;
    // The image member is evaluated at the mapped pair exactly as the map
    // produces it: the square class of the cover scalar is sensitive to
    // the representative chosen for the parameter.
    Arrangement source = specialize(family, t.a, t.b);
    Arrangement target = specialize(family, claim.image_a.eval(t.a, t.b),
                                    claim.image_b.eval(t.a, t.b));
    std::vector<std::optional<Scalar>> row;
    for (const Perm& sigma : candidates) {
      auto witness = projective_equivalence(source, target, sigma);
      if (witness) {
        verdict.equivalent = true;
        verdict.covers.push_back(witness->cover_scalar);
        if (is_square(witness->cover_scalar)) verdict.has_square_cover = true;
        row.emplace_back(witness->cover_scalar);
      } else {
        row.emplace_back(std::nullopt);
      }
    }
    cover.push_back(std::move(row));
    report.all_equivalent = report.all_equivalent && verdict.equivalent;
    report.samples.push_back(std::move(verdict));
  }

  // Straight: some relabeling works at every sample with cover scalars of
  // one fixed square class 1 or -1, so the map lifts to the double cover
  // with a rational (or i times rational) scale everywhere.  A class that
  // varies with the parameter, or a fixed class other than +-1, is a
  // quadratic twist.
  bool liftable = false;
  for (size_t k = 0; k < candidates.size() && !liftable; ++k) {
    bool works = true;
    for (size_t s = 0; s < cover.size() && works; ++s) {
      if (!cover[s][k]) {
        works = false;
        break;
      }
      const Scalar& c = *cover[s][k];
      if (!is_square(c) && !is_square(-c)) works = false;
      else if (s > 0 && !is_square(c * *cover[0][k])) works = false;
    }
    liftable = works;
  }
  report.straight = report.all_equivalent && liftable;
  report.twisted = report.all_equivalent && !liftable;
  report.matches_claim =
      claim.kind == ParameterMapClaim::Kind::Straight ? report.straight : report.twisted;
  return report;
}

// ---------------------------------------------------------------------------
// Cover automorphisms.

namespace {

// lambda with g = lambda * reference as vectors of forms, as an exact
// fraction (num, den); nullopt if not proportional.
std::optional<std::pair<BinForm, BinForm>> form_vector_ratio(
    const std::array<BinForm, 4>& g, const std::array<BinForm, 4>& reference) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!(g[static_cast<size_t>(i)] * reference[static_cast<size_t>(j)] ==
            g[static_cast<size_t>(j)] * reference[static_cast<size_t>(i)]))
        return std::nullopt;
  for (int i = 0; i < 4; ++i) {
    if (!reference[static_cast<size_t>(i)].is_zero()) {
      if (g[static_cast<size_t>(i)].is_zero()) return std::nullopt;
      return std::make_pair(g[static_cast<size_t>(i)], reference[static_cast<size_t>(i)]);
    }
  }
  return std::nullopt;
}

}  // namespace

CoverCheck verify_projective_map(const Arrangement& source, const Arrangement& target,
                                 const Perm& sigma,
                                 const std::array<std::array<BinForm, 4>, 4>& matrix) {
  CoverCheck check;
  const FieldDesc f = source.field;
  if (target.field != f) {
    check.diagnostic = "field mismatch between source and target";
    return check;
  }
  BinForm num = BinForm::constant(Scalar::one(f));
  BinForm den = BinForm::constant(Scalar::one(f));
  for (int i = 1; i <= 8; ++i) {
    // g = f^src_i o M
    std::array<BinForm, 4> g{BinForm::zero(f), BinForm::zero(f), BinForm::zero(f),
                             BinForm::zero(f)};
    const auto& src = source.planes[static_cast<size_t>(i - 1)].coeff;
    for (int k = 0; k < 4; ++k) {
      BinForm acc = BinForm::zero(f);
      for (int j = 0; j < 4; ++j) {
        BinForm term = src[static_cast<size_t>(j)] * matrix[static_cast<size_t>(j)][static_cast<size_t>(k)];
        if (term.is_zero()) continue;
        acc = acc.is_zero() ? term : acc + term;
      }
      g[static_cast<size_t>(k)] = acc;
    }
    const auto& tgt = target.planes[static_cast<size_t>(sigma(i) - 1)].coeff;
    auto lambda = form_vector_ratio(g, tgt);
    if (!lambda) {
      check.diagnostic = "plane " + std::to_string(i) + " does not map onto plane " +
                         std::to_string(sigma(i));
      return check;
    }
    num = num * lambda->first;
    den = den * lambda->second;
  }
  check.ok = true;
  check.diagnostic = "cover scalar (" + num.str() + ")/(" + den.str() + ")";
  return check;
}

CoverCheck verify_cover_automorphism(
    const Arrangement& arr, const Perm& sigma,
    const std::array<std::array<BinForm, 4>, 4>& matrix, const CoverScale& u_scale,
    const std::optional<std::pair<BinForm, BinForm>>& param_map) {
  CoverCheck check;
  const FieldDesc f = arr.field;
  Arrangement target = arr;
  if (param_map) target = substitute_parameters(arr, param_map->first, param_map->second);

  BinForm num = BinForm::constant(Scalar::one(f));
  BinForm den = BinForm::constant(Scalar::one(f));
  for (int i = 1; i <= 8; ++i) {
    std::array<BinForm, 4> g{BinForm::zero(f), BinForm::zero(f), BinForm::zero(f),
                             BinForm::zero(f)};
    const auto& src = arr.planes[static_cast<size_t>(i - 1)].coeff;
    for (int k = 0; k < 4; ++k) {
      BinForm acc = BinForm::zero(f);
      for (int j = 0; j < 4; ++j) {
        BinForm term = src[static_cast<size_t>(j)] * matrix[static_cast<size_t>(j)][static_cast<size_t>(k)];
        if (term.is_zero()) continue;
        acc = acc.is_zero() ? term : acc + term;
      }
      g[static_cast<size_t>(k)] = acc;
    }
    const auto& tgt = target.planes[static_cast<size_t>(sigma(i) - 1)].coeff;
    auto lambda = form_vector_ratio(g, tgt);
    if (!lambda) {
      check.diagnostic = "plane " + std::to_string(i) + " does not map onto plane " +
                         std::to_string(sigma(i));
      return check;
    }
    num = num * lambda->first;
    den = den * lambda->second;
  }
  // u^2 = lambda, i.e. (+-1) * form^2 * den == num.
  BinForm usq = u_scale.form * u_scale.form;
  if (u_scale.imaginary_unit) usq = -usq;
  if (!(usq * den == num)) {
    check.diagnostic = "u_scale^2 != product of plane scales";
    return check;
  }
  check.ok = true;
  return check;
}

}  // namespace octic
