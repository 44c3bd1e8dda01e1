#include "galpts/transformations.hpp"

#include <algorithm>

namespace galpts {

namespace {

BiPoly lin(const FieldPtr& f, const std::array<Elem, 3>& row) {
  return BiPoly::x(f).scaled(row[0]) + BiPoly::y(f).scaled(row[1]) + BiPoly::constant(f, row[2]);
}

RatMap from_matrix(const CurvePtr& src, const CurvePtr& dst, const Mat3& m, std::string name) {
  const FieldPtr& f = src->field;
  RatMap r;
  r.src = src;
  r.dst = dst;
  r.name = std::move(name);
  r.matrix = m;
  BiPoly den = lin(f, m[2]);
  r.px = normal_form(src, lin(f, m[0]), den);
  r.py = normal_form(src, lin(f, m[1]), den);
  return r;
}

Mat3 matmul(const Field& f, const Mat3& a, const Mat3& b) {
  Mat3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[i][j] = f.add(c[i][j], f.mul(a[i][k], b[k][j]));
  return c;
}

Mat3 diag(const Field& f, Elem a, Elem b, Elem c) {
  Mat3 m{};
  m[0][0] = a;
  m[1][1] = b;
  m[2][2] = c;
  (void)f;
  return m;
}

FFElem eval_uni(const UniPoly& u, const FFElem& X) {
  FFElem r(X.curve());
  for (int i = u.degree(); i >= 0; --i) r = r * X + FFElem::constant(X.curve(), u.coeff(i));
  return r;
}

}  // namespace

std::array<BiPoly, 3> RatMap::components() const {
  BiPoly nx = px.numerator(), ny = py.numerator();
  BiPoly dx = px.denominator(), dy = py.denominator();
  return {nx * dy, ny * dx, dx * dy};
}

RatMap identity_map(const CurvePtr& c) {
  const Field& f = *c->field;
  RatMap id = from_matrix(c, c, diag(f, f.one(), f.one(), f.one()), "id");
  id.inverse = std::make_shared<RatMap>(id);
  return id;
}

FFElem eval_at(const BiPoly& g, const FFElem& X, const FFElem& Y) {
  const CurvePtr& c = X.curve();
  FFElem acc(c);
  if (g.is_zero()) return acc;
  auto cols = g.to_y_major();
  FFElem ypow = FFElem::constant(c, c->field->one());
  for (size_t j = 0; j < cols.size(); ++j) {
    if (j > 0) ypow *= Y;
    if (!cols[j].is_zero()) acc += eval_uni(cols[j], X) * ypow;
  }
  return acc;
}

FFElem pullback(const RatMap& m, const FFElem& f) {
  if (f.curve() != m.dst) throw MathError("pullback: function does not live on the map's target");
  FFElem num = eval_at(f.numerator(), m.px, m.py);
  if (f.den().degree() == 0) return num;
  FFElem den = eval_uni(f.den(), m.px);
  if (den.is_zero()) throw MathError("pullback: denominator collapses on the source curve");
  return num / den;
}

RatMap compose(const RatMap& a, const RatMap& b) {
  if (b.dst != a.src) throw MathError("compose: incompatible curves");
  if (a.matrix && b.matrix)
    return from_matrix(b.src, a.dst, matmul(*a.src->field, *a.matrix, *b.matrix), a.name + "*" + b.name);
  RatMap r;
  r.src = b.src;
  r.dst = a.dst;
  r.name = a.name + "*" + b.name;
  r.px = pullback(b, a.px);
  r.py = pullback(b, a.py);
  return r;
}

bool same_map(const RatMap& a, const RatMap& b) {
  return a.src == b.src && a.dst == b.dst && a.px == b.px && a.py == b.py;
}

bool maps_into(const RatMap& m) { return eval_at(m.dst->affine, m.px, m.py).is_zero(); }

bool inverse_verified(const RatMap& m) {
  if (!m.inverse) return false;
  const RatMap& inv = *m.inverse;
  return same_map(compose(inv, m), identity_map(m.src)) && same_map(compose(m, inv), identity_map(m.dst));
}

ProjPoint image_of(const RatMap& m, const Place& place) {
  if (place.curve_ptr() != m.src) throw MathError("image_of: place is not on the map's source");
  auto comps = m.components();
  const Field& f = *m.src->field;
  for (int N = place.base_precision(); N <= place.max_precision(); N *= 2) {
    const BranchExpansion& be = place.expansion(N);
    std::array<LaurentSeries, 3> s;
    for (int i = 0; i < 3; ++i) s[i] = eval_series(comps[i], be.x, be.y);
    std::optional<int> v;
    for (auto& e : s)
      if (auto ve = e.valuation()) v = v ? std::min(*v, *ve) : *ve;
    if (!v) continue;
    bool known = std::all_of(s.begin(), s.end(), [&](const LaurentSeries& e) { return e.precision() > *v; });
    if (!known) continue;
    return ProjPoint::make(f, s[0].coeff(*v), s[1].coeff(*v), s[2].coeff(*v));
  }
  throw MathError("image_of: precision cap reached at " + place.label());
}

int AutGroup::index_of(const RatMap& m) const {
  for (size_t i = 0; i < elems.size(); ++i)
    if (same_map(elems[i], m)) return static_cast<int>(i);
  return -1;
}

bool AutGroup::latin_square() const {
  const size_t n = elems.size();
  if (table.size() != n) return false;
  for (size_t i = 0; i < n; ++i) {
    std::vector<bool> row(n), col(n);
    for (size_t j = 0; j < n; ++j) {
      int r = table[i][j], c = table[j][i];
      if (r < 0 || c < 0 || row[r] || col[c]) return false;
      row[r] = col[c] = true;
    }
  }
  return true;
}

AutGroup make_group(CurvePtr curve, std::string name, std::vector<RatMap> elems) {
  AutGroup g;
  g.curve = curve;
  g.name = std::move(name);
  RatMap id = identity_map(curve);
  auto it = std::find_if(elems.begin(), elems.end(), [&](const RatMap& m) { return same_map(m, id); });
  if (it == elems.end()) throw MathError(g.name + ": identity missing");
  std::rotate(elems.begin(), it, it + 1);
  for (const auto& e : elems) {
    if (e.src != curve || e.dst != curve) throw MathError(g.name + ": element is not a self-map");
    if (!maps_into(e)) throw MathError(g.name + ": element " + e.name + " does not preserve the curve");
  }
  g.elems = std::move(elems);
  const size_t n = g.elems.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < i; ++j)
      if (same_map(g.elems[i], g.elems[j])) throw MathError(g.name + ": repeated element");
  g.table.assign(n, std::vector<int>(n, -1));
  g.inverse.assign(n, -1);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      int k = g.index_of(compose(g.elems[i], g.elems[j]));
      if (k < 0) throw MathError(g.name + ": not closed under composition");
      g.table[i][j] = k;
      if (k == 0) g.inverse[i] = static_cast<int>(j);
    }
  if (!g.latin_square()) throw MathError(g.name + ": table is not a Latin square");
  return g;
}

const char* theorem_name(Theorem t) {
  switch (t) {
    case Theorem::T1a: return "thm1a";
    case Theorem::T1b: return "thm1b";
    case Theorem::T2: return "thm2";
  }
  return "?";
}

AutGroup make_G1(Theorem th, const FamilyConstants& pc, const CurvePtr& curve) {
  const Field& f = *curve->field;
  if (curve->field != pc.field) throw MathError("make_G1: curve and constants live in different fields");
  std::vector<RatMap> el;
  switch (th) {
    case Theorem::T1a:
      if (curve->family != Family::Fm) throw MathError("make_G1(T1a) needs an Fm curve");
      for (Elem l : pc.lambda_set) {
        Mat3 m = diag(f, f.one(), f.one(), f.one());
        m[0][2] = l;
        el.push_back(from_matrix(curve, curve, m, "t[" + std::to_string(l.v) + "]"));
      }
      break;
    case Theorem::T1b:
      if (curve->family != Family::Em) throw MathError("make_G1(T1b) needs an Em curve");
      for (Elem z : pc.zeta_set)
        el.push_back(from_matrix(curve, curve, diag(f, z, f.one(), f.one()), "sx[" + std::to_string(z.v) + "]"));
      break;
    case Theorem::T2:
      if (curve->family != Family::Gr) throw MathError("make_G1(T2) needs a Gr curve");
      for (Elem z : pc.zeta_set)
        el.push_back(from_matrix(curve, curve, diag(f, f.one(), z, f.one()), "sy[" + std::to_string(z.v) + "]"));
      break;
  }
  return make_group(curve, "G1", std::move(el));
}

RatMap make_alpha(const CurvePtr& fm) {
  if (fm->family != Family::Fm) throw MathError("alpha lives on Fm");
  const FieldPtr& f = fm->field;
  RatMap a;
  a.src = a.dst = fm;
  a.name = "alpha";
  FFElem xi = FFElem::x(fm).inverse();
  a.px = xi;
  a.py = FFElem::y(fm) * xi.pow(static_cast<int64_t>(fm->params.s()));
  (void)f;
  a.inverse = std::make_shared<RatMap>(a);
  return a;
}

namespace {

RatMap beta_raw(const CurvePtr& em, Elem l, std::string name) {
  const FieldPtr& f = em->field;
  RatMap b;
  b.src = b.dst = em;
  b.name = std::move(name);
  // D = 1 + l(x - 1)
  UniPoly D(f, {f->sub(f->one(), l), l});
  UniPoly N(f, {f->neg(l), f->add(f->one(), l)});
  FFElem dinv = FFElem::from_x(em, D).inverse();
  b.px = FFElem::from_x(em, N) * dinv;
  b.py = FFElem::y(em) * dinv.pow(static_cast<int64_t>(em->params.s()));
  return b;
}

}  // namespace

RatMap make_beta(const CurvePtr& em, Elem lambda) {
  if (em->family != Family::Em) throw MathError("beta lives on Em");
  const Field& f = *em->field;
  if (lambda.v == 0 || lambda == f.one()) throw MathError("beta needs lambda outside {0, 1}");
  RatMap b = beta_raw(em, lambda, "beta");
  b.inverse = std::make_shared<RatMap>(beta_raw(em, f.neg(lambda), "beta^-1"));
  return b;
}

UniPoly make_gb(const FieldPtr& f, unsigned n, unsigned r, Elem b) {
  uint64_t q = ipow(f->characteristic(), n);
  std::vector<Elem> c(ipow(q, r - 1) + 1);
  for (unsigned i = 0; i < r; ++i) {
    Elem coef = f->frobenius(b, uint64_t{n} * (i + r));
    c[ipow(q, i)] = (i % 2) ? f->neg(coef) : coef;
  }
  return UniPoly(f, c);
}

RatMap make_gamma(const CurvePtr& gr, const FamilyConstants& pc) {
  if (gr->family != Family::Gr) throw MathError("gamma lives on Gr");
  const FieldPtr& f = gr->field;
  unsigned n = gr->params.n, r = gr->params.e;
  BiPoly gb = BiPoly::from_uni(make_gb(f, n, r, pc.b), Var::Y);
  auto build = [&](BiPoly g, Elem c, Elem shift, std::string name) {
    RatMap m;
    m.src = m.dst = gr;
    m.name = std::move(name);
    m.px = FFElem::from_poly(gr, g + BiPoly::constant(f, c) + BiPoly::x(f));
    m.py = FFElem::from_poly(gr, BiPoly::y(f) + BiPoly::constant(f, shift));
    return m;
  };
  RatMap g = build(gb, pc.c, pc.b, "gamma");
  g.inverse = std::make_shared<RatMap>(build(-gb, pc.c_prime, f->neg(pc.b), "gamma^-1"));
  return g;
}

UniPoly beta_numerator(const FieldPtr& f, uint64_t q, Elem l) {
  UniPoly x = UniPoly::x(f), one = UniPoly::constant(f, f->one()), L = UniPoly::constant(f, l);
  UniPoly a = x + L * (x - one), d = one + L * (x - one);
  return x.pow(q + 1) - one - a.pow(q + 1) + d.pow(q + 1);
}

UniPoly beta_numerator_expanded(const FieldPtr& f, uint64_t q, Elem l) {
  UniPoly x = UniPoly::x(f), one = UniPoly::constant(f, f->one()), L = UniPoly::constant(f, l);
  UniPoly xq = x.pow(q);
  return -(L * (x - one) * xq) + L * x * (xq - one) + L * (x - one) - L * (xq - one);
}

std::array<bool, 4> check_gb_properties(const FieldPtr& f, unsigned n, unsigned r, Elem b, uint64_t seed) {
  std::mt19937_64 rng(seed);
  uint64_t q = ipow(f->characteristic(), n);
  UniPoly gb = make_gb(f, n, r, b);
  std::array<bool, 4> ok{};
  ok[0] = make_gb(f, n, r, f->neg(b)) == -gb;

  UniPoly negx = UniPoly::monomial(f, f->neg(f->one()), 1);
  ok[1] = gb.compose(negx) == -gb;
  BiPoly G = BiPoly::from_uni(gb, Var::X);
  BiPoly sum = G.substitute(BiPoly::x(f) + BiPoly::y(f), BiPoly::y(f));
  ok[2] = (sum - G - BiPoly::from_uni(gb, Var::Y)).is_zero();
  for (int i = 0; i < 20; ++i) {
    Elem a = f->random(rng), y = f->random(rng);
    ok[1] = ok[1] && gb.eval(f->neg(a)) == f->neg(gb.eval(a));
    ok[2] = ok[2] && gb.eval(f->add(y, a)) == f->add(gb.eval(y), gb.eval(a));
  }
  uint64_t qr = ipow(q, r);
  UniPoly rhs = UniPoly::monomial(f, b, qr) + UniPoly::monomial(f, f->frobenius(b, uint64_t{n} * r), 1);
  ok[3] = gb.pow(q) + gb == rhs;
  return ok;
}

AutGroup conjugate(const AutGroup& G, const RatMap& h, ConjSide side, std::string name) {
  if (!h.inverse) throw MathError("conjugate: map has no inverse");
  const RatMap& hi = *h.inverse;
  std::vector<RatMap> el;
  for (const auto& g : G.elems) {
    RatMap c = side == ConjSide::HinvGH ? compose(hi, compose(g, h)) : compose(h, compose(g, hi));
    c.name = name + "[" + g.name + "]";
    el.push_back(std::move(c));
  }
  AutGroup r = make_group(G.curve, std::move(name), std::move(el));
  if (r.order() != G.order()) throw MathError("conjugation changed the group order");
  return r;
}

AutGroup group_intersection(const AutGroup& a, const AutGroup& b) {
  if (a.curve != b.curve) throw MathError("group_intersection: different curves");
  std::vector<RatMap> el;
  for (const auto& g : a.elems)
    if (b.index_of(g) >= 0) el.push_back(g);
  return make_group(a.curve, a.name + "&" + b.name, std::move(el));
}

std::vector<ProjPoint> orbit(const AutGroup& G, const Place& place) {
  std::vector<ProjPoint> out;
  for (const auto& g : G.elems) out.push_back(image_of(g, place));
  return out;
}

FixedFieldReport verify_fixed_field(const AutGroup& G, const FFElem& t, uint64_t seed) {
  FixedFieldReport r;
  r.all_fixed = std::all_of(G.elems.begin(), G.elems.end(), [&](const RatMap& g) { return pullback(g, t) == t; });
  r.degree = extension_degree(t, seed, &r.ext);
  r.ok = r.all_fixed && r.degree == static_cast<int>(G.order());
  return r;
}

FmEmChain fm_em_chain(const FamilyConstants& pc, const FieldPtr& field) {
  const FamilyParams& fp = pc.params;
  if (fp.mode != Mode::Fm) throw ConfigError("the chain relates Fm and Em");
  if (field != pc.field) throw MathError("fm_em_chain: constants live in a different field");
  const FieldPtr& f = field;
  const uint64_t q = fp.q(), m = fp.e, s = fp.s();
  const Elem one = f->one(), mone = f->neg(one), a = pc.a_root;
  FmEmChain L;
  L.fm = make_curve(Family::Fm, fp, f);
  L.em = make_curve(Family::Em, fp, f);
  BiPoly ym = BiPoly::monomial(f, one, 0, m);
  L.fbar = make_curve(ym + BiPoly::monomial(f, mone, q, 0) + BiPoly::monomial(f, mone, 1, 0) + BiPoly::constant(f, mone));
  L.mid = make_curve(ym + BiPoly::monomial(f, mone, q + 1, 0) + BiPoly::monomial(f, mone, q, 0) +
                     BiPoly::monomial(f, mone, 1, 0));

  auto affine_map = [](CurvePtr src, CurvePtr dst, FFElem px, FFElem py, std::string name) {
    RatMap r;
    r.src = std::move(src);
    r.dst = std::move(dst);
    r.px = std::move(px);
    r.py = std::move(py);
    r.name = std::move(name);
    return r;
  };
  L.stage1 = affine_map(L.fm, L.fbar, FFElem::x(L.fm) - FFElem::constant(L.fm, a), FFElem::y(L.fm), "shift(-a)");
  FFElem xi = FFElem::x(L.fbar).inverse();
  L.stage2 = affine_map(L.fbar, L.mid, xi, FFElem::y(L.fbar) * xi.pow(int64_t(s)), "invert");
  L.stage3 = affine_map(L.mid, L.em, FFElem::x(L.mid) + FFElem::constant(L.mid, one), FFElem::y(L.mid), "shift(1)");
  L.composite = compose(L.stage3, compose(L.stage2, L.stage1));
  L.composite.name = "chain";

  FFElem u = (FFElem::x(L.fm) - FFElem::constant(L.fm, a)).inverse();
  RatMap closed = affine_map(L.fm, L.em, u + FFElem::constant(L.fm, one), FFElem::y(L.fm) * u.pow(int64_t(s)), "closed");
  L.composite_formula = same_map(L.composite, closed);

  FFElem v = (FFElem::x(L.em) - FFElem::constant(L.em, one)).inverse();
  L.composite.inverse = std::make_shared<RatMap>(
      affine_map(L.em, L.fm, FFElem::constant(L.em, a) + v, FFElem::y(L.em) * v.pow(int64_t(s)), "chain^-1"));

  L.stage_maps_ok = maps_into(L.stage1) && maps_into(L.stage2) && maps_into(L.stage3) && maps_into(L.composite) &&
                    maps_into(*L.composite.inverse);
  FFElem X = FFElem::x(L.fbar);
  FFElem lhs = xi.pow(int64_t(q + 1)) + xi.pow(int64_t(q)) + xi;
  FFElem mid = (X.pow(int64_t(q)) + X + FFElem::constant(L.fbar, one)) / X.pow(int64_t(q + 1));
  FFElem rhs = (FFElem::y(L.fbar) * xi.pow(int64_t(s))).pow(int64_t(m));
  L.mid_identity = lhs == mid && mid == rhs;
  L.inverse_ok = inverse_verified(L.composite);
  return L;
}

}  // namespace galpts
