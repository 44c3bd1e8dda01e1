#include "galpts/galois.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace galpts {

std::vector<std::vector<Elem>> linear_relations(const std::vector<FFElem>& fs) {
  if (fs.empty()) return {};
  const FieldPtr& K = fs[0].field();
  UniPoly L = UniPoly::constant(K, K->one());
  for (const auto& e : fs) L = L * e.den().exact_div(gcd(L, e.den()));
  const size_t n = fs[0].num().size();
  std::vector<std::vector<UniPoly>> cols;
  std::vector<int> maxdeg(n, -1);
  for (const auto& e : fs) {
    UniPoly scale = L.exact_div(e.den());
    std::vector<UniPoly> v(n);
    for (size_t j = 0; j < n; ++j) {
      v[j] = e.num()[j] * scale;
      maxdeg[j] = std::max(maxdeg[j], v[j].degree());
    }
    cols.push_back(std::move(v));
  }
  std::vector<size_t> offset(n + 1, 0);
  for (size_t j = 0; j < n; ++j) offset[j + 1] = offset[j] + (maxdeg[j] + 1);
  std::vector<std::vector<Elem>> m(offset[n], std::vector<Elem>(fs.size()));
  for (size_t c = 0; c < fs.size(); ++c)
    for (size_t j = 0; j < n; ++j)
      for (int a = 0; a <= cols[c][j].degree(); ++a) m[offset[j] + a][c] = cols[c][j].coeff(a);
  return kernel(*K, std::move(m), fs.size());
}

const char* point_kind_name(PointKind k) {
  switch (k) {
    case PointKind::InnerSmooth: return "inner-smooth";
    case PointKind::InnerSingular: return "inner-singular";
    case PointKind::Outer: return "outer";
  }
  return "?";
}

PointKind classify_point(const PlaneCurve& image, const ProjPoint& pt) {
  if (!image.contains(pt)) return PointKind::Outer;
  for (int i = 0; i < 3; ++i) {
    TernaryForm d = image.form.partial(i);
    if (!d.is_zero() && d.eval(pt.c).v != 0) return PointKind::InnerSmooth;
  }
  return PointKind::InnerSingular;
}

int point_multiplicity(const PlaneCurve& image, const ProjPoint& pt) {
  if (!image.contains(pt)) return 0;
  const FieldPtr& fp = image.field;
  const Field& f = *fp;
  int chart = 2;
  while (pt.c[chart].v == 0) --chart;
  Elem s = f.inv(pt.c[chart]);
  std::array<Elem, 2> c0;
  for (int i = 0, k = 0; i < 3; ++i)
    if (i != chart) c0[k++] = f.mul(pt.c[i], s);
  BiPoly g = dehomogenize(image.form, chart)
                 .substitute(BiPoly::x(fp) + BiPoly::constant(fp, c0[0]), BiPoly::y(fp) + BiPoly::constant(fp, c0[1]));
  int mult = image.degree;
  for (auto& [e, c] : g.terms()) mult = std::min<int>(mult, e.first + e.second);
  return mult;
}

FFElem projection_function(const ProjPoint& c, const FFElem& f, const FFElem& g) {
  const CurvePtr& C = f.curve();
  auto k = [&](Elem e) { return FFElem::constant(C, e); };
  FFElem one = k(C->field->one());
  FFElem L1(C), L2(C);
  if (c.c[2].v != 0) {
    L1 = k(c.c[2]) * f - k(c.c[0]);
    L2 = k(c.c[2]) * g - k(c.c[1]);
  } else if (c.c[1].v != 0) {
    L1 = k(c.c[1]) * f - k(c.c[0]) * g;
    L2 = one;
  } else {
    L1 = g;
    L2 = one;
  }
  return L1 / L2;
}

BiPoly implicit_equation(const FFElem& f, const FFElem& g, int degree, int* relation_count) {
  const CurvePtr& C = f.curve();
  std::vector<FFElem> fp{FFElem::constant(C, C->field->one())}, gp{fp[0]};
  for (int i = 1; i <= degree; ++i) {
    fp.push_back(fp.back() * f);
    gp.push_back(gp.back() * g);
  }
  std::vector<FFElem> mons;
  std::vector<std::pair<int, int>> exps;
  for (int tot = 0; tot <= degree; ++tot)
    for (int i = 0; i <= tot; ++i) {
      mons.push_back(fp[i] * gp[tot - i]);
      exps.emplace_back(i, tot - i);
    }
  auto rel = linear_relations(mons);
  if (relation_count) *relation_count = static_cast<int>(rel.size());
  if (rel.size() != 1)
    throw MathError("image relation space in degree " + std::to_string(degree) + " has dimension " +
                    std::to_string(rel.size()));
  BiPoly H(C->field);
  for (size_t k = 0; k < exps.size(); ++k)
    if (rel[0][k].v) H += BiPoly::monomial(C->field, rel[0][k], exps[k].first, exps[k].second);
  // scale so the leading coefficient in lex order is 1
  Elem lc = H.terms().rbegin()->second;
  return H.scaled(C->field->inv(lc));
}

namespace {

// Value of a function at a place where it is regular.
Elem value_at(const Place& place, const FFElem& h) {
  BiPoly num = h.numerator(), den = h.denominator();
  for (int N = place.base_precision(); N <= place.max_precision(); N *= 2) {
    const BranchExpansion& be = place.expansion(N);
    LaurentSeries a = eval_series(num, be.x, be.y), b = eval_series(den, be.x, be.y);
    auto vb = b.valuation();
    if (!vb) continue;
    if (a.precision() <= *vb) continue;
    return a.coeff(*vb) == Elem{} ? Elem{} : h.field()->div(a.coeff(*vb), b.lead());
  }
  throw MathError("value_at: precision cap at " + place.label());
}

// Random affine points of C over L, as (x, y) pairs.
std::vector<std::pair<Elem, Elem>> random_points(const BiPoly& FL, const Field& L, std::mt19937_64& rng, size_t want) {
  std::vector<std::pair<Elem, Elem>> pts;
  for (int tries = 0; tries < 4000 && pts.size() < want; ++tries) {
    Elem x0 = L.random(rng);
    UniPoly h = FL.at_x(x0);
    if (h.degree() < 1) continue;
    auto roots = find_roots_split(h, rng());
    if (roots.empty()) continue;
    pts.emplace_back(x0, roots[rng() % roots.size()]);
  }
  return pts;
}

}  // namespace

EmbeddingResult build_embedding(const FFElem& f, const FFElem& g, int expected_degree, uint64_t seed) {
  EmbeddingResult r;
  r.source = f.curve();
  r.f = f;
  r.g = g;
  BiPoly H = implicit_equation(f, g, expected_degree, &r.relation_count);
  r.image = make_curve(H, Family::Image);
  r.image_degree = r.image->degree;
  r.map.src = r.source;
  r.map.dst = r.image;
  r.map.px = f;
  r.map.py = g;
  r.map.name = "embedding";

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  int deg_f = extension_degree(f, seed);
  r.birational = H.deg_y() == deg_f;

  FieldPtr L = sampling_field(*r.source);
  FieldHom h = embed(r.source->field, L);
  BiPoly HL = H.map(h);
  r.injective_samples = true;
  for (int k = 0; k < 5; ++k) {
    UniPoly hv = HL.at_x(L->random(rng));
    r.injective_samples = r.injective_samples && hv.degree() == deg_f && gcd(hv, hv.derivative()).degree() == 0;
  }

  BiPoly FL = r.source->affine.map(h);
  auto pts = random_points(FL, *L, rng, 20);
  r.sample_points_ok = pts.size() == 20;
  BiPoly fn = f.numerator().map(h), gn = g.numerator().map(h);
  UniPoly fd = f.den().map(h), gd = g.den().map(h);
  for (auto [x0, y0] : pts) {
    Elem a = fd.eval(x0), b = gd.eval(x0);
    if (a.v == 0 || b.v == 0) continue;
    Elem u = L->div(fn.eval(x0, y0), a), v = L->div(gn.eval(x0, y0), b);
    r.sample_points_ok = r.sample_points_ok && HL.eval(u, v).v == 0;
  }
  return r;
}

int ramification_index(const ProjPoint& center, const Place& place, const FFElem& f, const FFElem& g) {
  FFElem pi = projection_function(center, f, g);
  if (pi.is_constant()) throw MathError("projection is constant");
  int v = valuation(place, pi);
  if (v != 0) return std::abs(v);
  Elem c = value_at(place, pi);
  return valuation(place, pi - FFElem::constant(pi.curve(), c));
}

GaloisCertificate galois_certify(const ProjPoint& center, const FFElem& t, const AutGroup& G, const FFElem& f,
                                 const FFElem& g, const PlaneCurve& image, const Place* inner_place, uint64_t seed) {
  GaloisCertificate c;
  const Field& K = *t.field();
  c.center = center;
  c.kind = classify_point(image, center);
  c.group = G.name;
  c.group_order = G.order();

  FFElem pi = projection_function(center, f, g);
  for (const auto& rel : linear_relations({pi * t, pi, t, FFElem::constant(t.curve(), K.one())})) {
    // rel: a pi t + b pi + c t + d = 0, so pi = -(c t + d)/(a t + b)
    Elem det = K.sub(K.mul(rel[0], rel[3]), K.mul(rel[1], rel[2]));
    if (det.v != 0) c.pencil_ok = true;
  }

  c.distinct = true;
  for (size_t i = 0; i < G.order(); ++i)
    for (size_t j = 0; j < i; ++j) c.distinct = c.distinct && !same_map(G.elems[i], G.elems[j]);
  c.fixes_t = std::all_of(G.elems.begin(), G.elems.end(), [&](const RatMap& s) { return pullback(s, t) == t; });
  c.ext_degree = extension_degree(t, seed, &c.ext);
  c.degree_ok = c.ext_degree == static_cast<int>(G.order());
  c.projection_degree = image.degree - point_multiplicity(image, center);
  bool position = inner_place ? c.kind == PointKind::InnerSmooth : c.kind == PointKind::Outer;
  c.bookkeeping_ok = position && c.projection_degree == static_cast<int>(G.order());
  if (inner_place) {
    c.ramification = ramification_index(center, *inner_place, f, g);
    c.ramification_ok = c.ramification == static_cast<int>(G.order());
  }
  return c;
}

std::vector<ExclusionItem> proposition_exclusion_suite(const FamilyConstants& pc, uint64_t seed, int precision) {
  const FamilyParams& fp = pc.params;
  if (fp.mode != Mode::Fm) throw ConfigError("the exclusions concern Fm");
  const uint64_t q = fp.q(), m = fp.e, s = fp.s();
  if (q == 3 && m == 2) throw ConfigError("(q, m) = (3, 2) is excluded by hypothesis");
  const FieldPtr& K = pc.field;
  const Field& k = *K;
  CurvePtr C = make_curve(Family::Fm, fp, K);
  FFElem y = FFElem::y(C), x = FFElem::x(C);
  FFElem f = y.inverse(), g = x.pow(int64_t(s)) / y;
  EmbeddingResult emb = build_embedding(f, g, int(q + 1), seed);
  const PlaneCurve& img = *emb.image;

  Place Pinf(C, ProjPoint::make(k, k.zero(), k.one(), k.zero()), "P_inf", precision);
  Place P0(C, ProjPoint::affine(k, k.zero(), k.zero()), "P_0", precision);
  std::vector<Place> Qs;
  for (Elem l : pc.lambda_set)
    if (l.v != 0) Qs.emplace_back(C, ProjPoint::affine(k, l, k.zero()), "P_lambda[" + std::to_string(l.v) + "]", precision);

  std::vector<ExclusionItem> out;
  std::ostringstream w;

  // image of W against the line at infinity
  std::set<ProjPoint> phiW{image_of(emb.map, Pinf), image_of(emb.map, P0)};
  for (auto& Q : Qs) phiW.insert(image_of(emb.map, Q));
  BiPoly top = img.affine.top_part();
  std::set<ProjPoint> atinf;
  if (top.coeff(0, img.degree).v == 0) atinf.insert(ProjPoint::make(k, k.zero(), k.one(), k.zero()));
  UniPoly t1 = top.at_x(k.one());
  auto roots = find_roots(t1);
  for (Elem v : roots) atinf.insert(ProjPoint::make(k, k.one(), v, k.zero()));
  bool split = t1.is_zero() || squarefree_part(t1).degree() == static_cast<int>(roots.size());
  w << "|phi(W)|=" << phiW.size() << " |image at Z=0|=" << atinf.size();
  out.push_back({"phi(W) = image & {Z=0}", phiW == atinf && split, true, w.str()});

  // tangent at phi(P_inf)
  ProjPoint c010 = ProjPoint::make(k, k.zero(), k.one(), k.zero());
  std::array<Elem, 3> tangent;
  for (int i = 0; i < 3; ++i) tangent[i] = img.form.partial(i).eval(c010.c);
  bool smooth = tangent[0].v || tangent[1].v || tangent[2].v;
  int im = smooth ? intersection_multiplicity(img, tangent, c010) : -1;
  out.push_back({"tangent multiplicity at phi(P_inf) = q+1", smooth && im == int(q + 1), true,
                 "I=" + std::to_string(im) + " q+1=" + std::to_string(q + 1)});

  int v = valuation(Pinf, f);
  out.push_back({"v_{P_inf}(1/y) = q", v == int(q), true, "v=" + std::to_string(v)});

  ProjPoint phiP0 = image_of(emb.map, P0), phiPinf = image_of(emb.map, Pinf);
  bool all = !Qs.empty();
  std::ostringstream wq;
  for (auto& Q : Qs) {
    ProjPoint c = image_of(emb.map, Q);
    if (c == phiP0 || c == phiPinf) continue;
    int e = ramification_index(c, Q, f, g);
    wq << Q.label() << ":e=" << e << " ";
    all = all && e == int(m - 1) && e < int(q);
  }
  out.push_back({"e(Q) = m-1 < q off the two distinguished points", all, true, wq.str() + "m-1=" + std::to_string(m - 1)});
  out.push_back({"Sylow subgroup argument", true, false, "externally justified, not machine-checked"});
  out.push_back({"Weierstrass semigroup at P_inf", true, false, "externally justified, not machine-checked"});
  return out;
}

}  // namespace galpts
