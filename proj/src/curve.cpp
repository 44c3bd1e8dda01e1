#include "galpts/curve.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace galpts {

const char* family_name(Family f) {
  switch (f) {
    case Family::Fm: return "Fm";
    case Family::Gr: return "Gr";
    case Family::Em: return "Em";
    case Family::Image: return "Image";
    case Family::Other: return "Other";
  }
  return "?";
}

ProjPoint ProjPoint::make(const Field& f, Elem x, Elem y, Elem z) {
  ProjPoint p{{x, y, z}};
  int lead = 0;
  while (lead < 3 && p.c[lead].v == 0) ++lead;
  if (lead == 3) throw MathError("(0:0:0) is not a projective point");
  Elem s = f.inv(p.c[lead]);
  for (auto& e : p.c) e = f.mul(e, s);
  return p;
}

std::string ProjPoint::to_string(const Field& f) const {
  int last = 2;
  while (c[last].v == 0) --last;
  Elem s = f.inv(c[last]);
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < 3; ++i) os << (i ? ":" : "") << f.mul(c[i], s).v;
  os << ")";
  return os.str();
}

std::string PlaneCurve::describe() const {
  std::ostringstream os;
  os << family_name(family);
  if (family == Family::Fm || family == Family::Em)
    os << "(q=" << params.q() << ",m=" << params.e << ")";
  else if (family == Family::Gr)
    os << "(q=" << params.q() << ",r=" << params.e << ")";
  os << " deg " << degree << " over " << field->name();
  return os.str();
}

namespace {

CurvePtr finish(BiPoly f, int degree, Family family, FamilyParams fp) {
  auto c = std::make_shared<PlaneCurve>();
  c->field = f.field();
  c->form = homogenize(f, degree);
  c->affine = std::move(f);
  c->degree = degree;
  c->family = family;
  c->params = fp;
  auto cols = c->affine.to_y_major();
  const UniPoly& lc = cols.back();
  if (lc.degree() == 0) {
    Elem s = c->field->inv(lc.lc());
    for (auto& u : cols) u = u.scaled(s);
    c->monic_y = std::move(cols);
  }
  return c;
}

}  // namespace

CurvePtr make_curve(Family family, const FamilyParams& fp0, FieldPtr field) {
  FamilyParams fp = fp0;
  fp.mode = family == Family::Gr ? Mode::Gr : Mode::Fm;
  validate(fp);
  if (field->characteristic() != fp.p) throw ConfigError("field characteristic does not match p");
  uint64_t q = fp.q();
  Elem one = field->one(), mone = field->neg(one);
  BiPoly f(field);
  switch (family) {
    case Family::Fm:
      f = BiPoly::monomial(field, one, 0, fp.e) + BiPoly::monomial(field, mone, q, 0) +
          BiPoly::monomial(field, mone, 1, 0);
      return finish(f, static_cast<int>(q), family, fp);
    case Family::Em:
      f = BiPoly::monomial(field, one, 0, fp.e) + BiPoly::monomial(field, mone, q + 1, 0) +
          BiPoly::constant(field, one);
      return finish(f, static_cast<int>(q + 1), family, fp);
    case Family::Gr: {
      uint64_t d = ipow(q, fp.e) + 1;
      f = BiPoly::monomial(field, one, 0, d) + BiPoly::monomial(field, mone, q, 0) +
          BiPoly::monomial(field, mone, 1, 0);
      return finish(f, static_cast<int>(d), family, fp);
    }
    default:
      throw ConfigError("make_curve(family, ...) needs Fm, Gr or Em");
  }
}

CurvePtr make_curve(const BiPoly& affine, Family family) {
  if (affine.is_zero() || affine.total_degree() < 1) throw MathError("curve equation must be nonconstant");
  return finish(affine, affine.total_degree(), family, {});
}

CurvePtr base_change(const CurvePtr& c, const FieldHom& h) {
  if (h.is_identity()) return c;
  return finish(c->affine.map(h), c->degree, c->family, c->params);
}

std::vector<ProjPoint> singular_locus(const PlaneCurve& curve0, const FieldPtr& search) {
  CurvePtr cp = base_change(std::make_shared<PlaneCurve>(curve0), embed(curve0.field, search));
  const PlaneCurve& curve = *cp;
  const Field& f = *search;
  std::vector<ProjPoint> out;
  BiPoly fx = curve.affine.partial(Var::X), fy = curve.affine.partial(Var::Y);
  for (uint64_t v = 0; v < f.order(); ++v) {
    Elem x0{static_cast<uint32_t>(v)};
    UniPoly g = curve.affine.at_x(x0);
    if (g.is_zero()) throw MathError("curve contains a vertical line");
    g = gcd(g, fy.at_x(x0));
    if (g.degree() < 1) continue;
    for (Elem y0 : find_roots(g))
      if (fx.eval(x0, y0).v == 0) out.push_back(ProjPoint::affine(f, x0, y0));
  }
  std::array<TernaryForm, 3> d{curve.form.partial(0), curve.form.partial(1), curve.form.partial(2)};
  auto singular = [&](const ProjPoint& p) {
    if (curve.form.eval(p.c).v != 0) return false;
    for (auto& g : d)
      if (!g.is_zero() && g.eval(p.c).v != 0) return false;
    return true;
  };
  ProjPoint p100 = ProjPoint::make(f, f.one(), f.zero(), f.zero());
  if (singular(p100)) out.push_back(p100);
  for (uint64_t v = 0; v < f.order(); ++v) {
    ProjPoint p = ProjPoint::make(f, Elem{static_cast<uint32_t>(v)}, f.one(), f.zero());
    if (singular(p)) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Power-series Newton lift of a simple root z0 of H(0, Z) to precision N.
LaurentSeries hensel_lift(const BiPoly& H, Elem z0, int N) {
  const FieldPtr& f = H.field();
  BiPoly Hz = H.partial(Var::Y);
  LaurentSeries t = LaurentSeries::monomial(f, f->one(), 1);
  LaurentSeries z(f, 0, {z0}, 1);
  int k = 1;
  while (k < N) {
    k = std::min(2 * k, N);
    LaurentSeries zk(f, z.val(), z.coeffs(), k);
    LaurentSeries h = eval_series(H, t, zk);
    LaurentSeries hz = eval_series(Hz, t, zk);
    z = (zk - h * hz.inverse()).truncated(k);
  }
  return z;
}

}  // namespace

BranchExpansion branch_expand(const PlaneCurve& curve, const ProjPoint& center, int N) {
  const FieldPtr& fp = curve.field;
  const Field& f = *fp;
  if (N < 1) throw MathError("precision must be positive");
  if (!curve.contains(center)) throw MathError("branch center " + center.to_string(f) + " is not on the curve");
  int chart = 2;
  while (center.c[chart].v == 0) --chart;
  Elem s = f.inv(center.c[chart]);
  std::array<Elem, 2> c0;
  for (int i = 0, k = 0; i < 3; ++i)
    if (i != chart) c0[k++] = f.mul(center.c[i], s);

  BiPoly g = dehomogenize(curve.form, chart);
  BiPoly G = g.substitute(BiPoly::x(fp) + BiPoly::constant(fp, c0[0]), BiPoly::y(fp) + BiPoly::constant(fp, c0[1]));
  if (G.coeff(0, 0).v != 0) throw MathError("local equation does not vanish at the center");

  int A = -1, B = -1;
  for (auto& [e, c] : G.terms()) {
    if (e.second == 0 && (A < 0 || int(e.first) < A)) A = e.first;
    if (e.first == 0 && (B < 0 || int(e.second) < B)) B = e.second;
  }
  if (A < 0 || B < 0) throw MathError("curve contains a line through the center (reducible)");
  for (auto& [e, c] : G.terms())
    if (long(e.first) * B + long(e.second) * A < long(A) * B)
      throw MathError("Newton polygon at " + center.to_string(f) + " has several edges (multibranch center)");
  if (std::gcd(A, B) != 1)
    throw MathError("Newton polygon edge at " + center.to_string(f) + " is not primitive; unsupported singularity");
  Elem cu = G.coeff(A, 0), cw = G.coeff(0, B);
  uint32_t p = f.characteristic();

  // orientation 2: w = nu t^A, u = mu t^B Z; orientation 1: u = mu t^B, w = nu t^A Z.
  // With b'A - a'B = 1, mu = kappa^b' and nu = kappa^a' for kappa = -c_w/c_u
  // make Z = 1 the starting root, so no root extraction is needed.
  bool orient2;
  if (A % p != 0)
    orient2 = true;
  else if (B % p != 0)
    orient2 = false;
  else
    throw MathError("wildly ramified branch at " + center.to_string(f) + " is unsupported");
  long bp = 1;
  while ((bp * A - 1) % B != 0) ++bp;
  long ap = (bp * A - 1) / B;
  Elem kappa = f.neg(f.div(cw, cu));
  Elem mu = f.pow(kappa, uint64_t(bp)), nu = f.pow(kappa, uint64_t(ap));
  Elem z0 = f.one();
  BiPoly H(fp);
  for (auto& [e, c] : G.terms()) {
    uint32_t texp = e.first * B + e.second * A - A * B;
    Elem cc = f.mul(c, f.mul(f.pow(mu, e.first), f.pow(nu, e.second)));
    H += BiPoly::monomial(fp, cc, texp, orient2 ? e.first : e.second);
  }
  LaurentSeries z = hensel_lift(H, z0, N);
  LaurentSeries t = LaurentSeries::monomial(fp, f.one(), 1);
  if (!eval_series(H, t, z).vanishes()) throw MathError("Hensel lift failed to annihilate the local equation");

  LaurentSeries u, w;
  if (orient2) {
    w = LaurentSeries::monomial(fp, nu, A);
    u = z.shifted(B).scaled(mu);
  } else {
    u = LaurentSeries::monomial(fp, mu, B);
    w = z.shifted(A).scaled(nu);
  }
  BranchExpansion be;
  be.center = center;
  be.chart = chart;
  be.precision = N;
  be.A = A;
  be.B = B;
  LaurentSeries one = LaurentSeries::constant(fp, f.one());
  std::array<LaurentSeries, 2> loc{u + LaurentSeries::constant(fp, c0[0]), w + LaurentSeries::constant(fp, c0[1])};
  for (int i = 0, k = 0; i < 3; ++i) be.hom[i] = i == chart ? one : loc[k++];
  LaurentSeries zinv = be.hom[2].inverse();
  be.x = be.hom[0] * zinv;
  be.y = be.hom[1] * zinv;
  return be;
}

Place::Place(CurvePtr curve, ProjPoint center, std::string label, int precision)
    : curve_(std::move(curve)),
      center_(center),
      label_(std::move(label)),
      base_(precision > 0 ? precision : default_precision(*curve_)),
      cache_(std::make_shared<Cache>()) {
  expansion(base_);  // fail early for unsupported centers
}

const BranchExpansion& Place::expansion(int N) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  for (auto& e : cache_->items)
    if (e->precision == N) return *e;
  cache_->items.push_back(std::make_unique<BranchExpansion>(branch_expand(*curve_, center_, N)));
  return *cache_->items.back();
}

namespace {

std::optional<int> order_at(const BranchExpansion& be, const BiPoly& num, const BiPoly& den) {
  auto vn = eval_series(num, be.x, be.y).valuation();
  auto vd = eval_series(den, be.x, be.y).valuation();
  if (!vn || !vd) return std::nullopt;
  return *vn - *vd;
}

}  // namespace

int Place::valuation(const BiPoly& num, const BiPoly& den) const {
  if (num.is_zero()) throw MathError("valuation of the zero function");
  if (den.is_zero()) throw MathError("zero denominator");
  std::optional<int> prev;
  for (int N = base_; N <= max_precision(); N *= 2) {
    auto v = order_at(expansion(N), num, den);
    if (v && prev) {
      if (*v != *prev) throw MathError("valuation changed under precision doubling at " + label_);
      return *v;
    }
    prev = v;
  }
  throw MathError("valuation did not stabilise at " + label_ + " (function may vanish on the curve)");
}

int Place::valuation(const BiPoly& num) const { return valuation(num, BiPoly::constant(curve_->field, curve_->field->one())); }

int intersection_multiplicity(const PlaneCurve& curve, const std::array<Elem, 3>& line, const ProjPoint& point) {
  const Field& f = *curve.field;
  Elem on = f.zero();
  for (int i = 0; i < 3; ++i) on = f.add(on, f.mul(line[i], point.c[i]));
  if (on.v != 0) throw MathError("point is not on the line");
  if (!curve.contains(point)) throw MathError("point is not on the curve");
  int cap = 64 * std::max(curve.degree, 4);
  for (int N = default_precision(curve); N <= cap; N *= 2) {
    BranchExpansion be = branch_expand(curve, point, N);
    LaurentSeries l = be.hom[0].scaled(line[0]) + be.hom[1].scaled(line[1]) + be.hom[2].scaled(line[2]);
    if (auto v = l.valuation()) return *v;
  }
  throw MathError("line appears to be a component of the curve");
}

}  // namespace galpts
