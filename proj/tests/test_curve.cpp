#include <gtest/gtest.h>

#include "galpts/curve.hpp"

using namespace galpts;

namespace {

CurvePtr fm(uint32_t p, unsigned n, unsigned m, unsigned k = 2) {
  return make_curve(Family::Fm, {p, n, m, Mode::Fm}, build_field(p, n * k));
}

int vx(const Place& P) { return P.valuation(BiPoly::x(P.curve().field)); }
int vy(const Place& P) { return P.valuation(BiPoly::y(P.curve().field)); }

}  // namespace

TEST(Curve, FmFormAndDegree) {
  auto c = fm(3, 1, 2);
  const Field& f = *c->field;
  EXPECT_EQ(c->degree, 3);
  TernaryForm expected(c->field, 3);
  expected.set({0, 2, 1}, f.one());
  expected.set({3, 0, 0}, f.neg(f.one()));
  expected.set({1, 0, 2}, f.neg(f.one()));
  EXPECT_EQ(c->form, expected);
}

TEST(Curve, GrAndEmDegrees) {
  auto g = make_curve(Family::Gr, {2, 1, 2, Mode::Gr}, build_field(2, 4));
  EXPECT_EQ(g->degree, 5);
  EXPECT_EQ(g->affine.coeff(0, 5), g->field->one());
  auto e = make_curve(Family::Em, {3, 1, 2, Mode::Fm}, build_field(3, 2));
  EXPECT_EQ(e->degree, 4);
}

TEST(Curve, RejectsBadParameters) {
  EXPECT_THROW(fm(2, 2, 2), ConfigError);  // 2 does not divide 5
  EXPECT_THROW(make_curve(Family::Gr, {2, 1, 1, Mode::Gr}, build_field(2, 1)), ConfigError);
  EXPECT_THROW(make_curve(Family::Fm, {3, 1, 2, Mode::Fm}, build_field(5, 1)), ConfigError);
}

TEST(SingularLocus, FmThreeTwoIsSmooth) {
  auto c = fm(3, 1, 2);
  EXPECT_TRUE(singular_locus(*c, build_field(3, 2)).empty());
  EXPECT_TRUE(singular_locus(*c, build_field(3, 4)).empty());
}

TEST(SingularLocus, FmFiveTwo) {
  auto c = fm(5, 1, 2);
  const Field& f = *c->field;
  std::vector<ProjPoint> expected{ProjPoint::make(f, f.zero(), f.one(), f.zero())};
  EXPECT_EQ(singular_locus(*c, build_field(5, 2)), expected);
  EXPECT_EQ(singular_locus(*c, build_field(5, 4)).size(), 1u);
}

TEST(SingularLocus, GrTwoTwo) {
  auto c = make_curve(Family::Gr, {2, 1, 2, Mode::Gr}, build_field(2, 4));
  const Field& f = *c->field;
  std::vector<ProjPoint> expected{ProjPoint::make(f, f.one(), f.zero(), f.zero())};
  EXPECT_EQ(singular_locus(*c, c->field), expected);
  EXPECT_EQ(singular_locus(*c, build_field(2, 8)).size(), 1u);
}

TEST(Branch, SmoothAffineOrigin) {
  auto c = fm(3, 1, 2);
  const Field& f = *c->field;
  Place P(c, ProjPoint::affine(f, f.zero(), f.zero()), "origin");
  EXPECT_EQ(vy(P), 1);
  EXPECT_EQ(vx(P), 2);  // tangent x = 0 meets the branch to order m
}

TEST(Branch, InfinityValuationsFmGrid) {
  struct Case { uint32_t p; unsigned n, m; };
  for (auto k : {Case{3, 1, 2}, Case{5, 1, 2}, Case{5, 1, 3}, Case{7, 1, 2}, Case{7, 1, 4}, Case{2, 3, 3}}) {
    auto c = fm(k.p, k.n, k.m);
    const Field& f = *c->field;
    Place P(c, ProjPoint::make(f, f.zero(), f.one(), f.zero()), "P_inf");
    EXPECT_EQ(vx(P), -int(k.m));
    EXPECT_EQ(vy(P), -int(ipow(k.p, k.n)));
    // 1/y has a zero of order q
    EXPECT_EQ(P.valuation(BiPoly::constant(c->field, f.one()), BiPoly::y(c->field)), int(ipow(k.p, k.n)));
  }
}

TEST(Branch, GrInfinity) {
  auto c = make_curve(Family::Gr, {2, 1, 2, Mode::Gr}, build_field(2, 4));
  const Field& f = *c->field;
  Place Q(c, ProjPoint::make(f, f.one(), f.zero(), f.zero()), "Q_inf");
  EXPECT_EQ(vx(Q), -5);
  EXPECT_EQ(vy(Q), -2);
  auto c3 = make_curve(Family::Gr, {3, 1, 2, Mode::Gr}, build_field(3, 8));
  const Field& f3 = *c3->field;
  Place Q3(c3, ProjPoint::make(f3, f3.one(), f3.zero(), f3.zero()), "Q_inf");
  EXPECT_EQ(vx(Q3), -10);
  EXPECT_EQ(vy(Q3), -3);
}

TEST(Branch, ZeroOfXsMinusLambdaS) {
  // (q, m) = (5, 3), s = 2, lambda^4 = -1
  auto c = fm(5, 1, 3);
  const FieldPtr& fp = c->field;
  const Field& f = *fp;
  int checked = 0;
  for (uint32_t v = 1; v < f.order(); ++v) {
    Elem l{v};
    if (f.add(f.pow(l, 4), f.one()).v != 0) continue;
    Place Q(c, ProjPoint::affine(f, l, f.zero()), "Q");
    BiPoly g = BiPoly::monomial(fp, f.one(), 2, 0) - BiPoly::constant(fp, f.pow(l, 2));
    EXPECT_EQ(Q.valuation(g), 3);
    EXPECT_EQ(vy(Q), 1);
    EXPECT_EQ(Q.valuation(BiPoly::constant(fp, f.one())), 0);
    ++checked;
  }
  EXPECT_EQ(checked, 4);
}

TEST(Branch, AnnihilatesEquationAndIsDeterministic) {
  auto c = fm(7, 1, 4);
  const Field& f = *c->field;
  ProjPoint inf = ProjPoint::make(f, f.zero(), f.one(), f.zero());
  auto a = branch_expand(*c, inf, 40), b = branch_expand(*c, inf, 40);
  EXPECT_EQ(a.x, b.x);
  EXPECT_EQ(a.y, b.y);
  LaurentSeries r = eval_series(c->affine, a.x, a.y);
  EXPECT_TRUE(r.vanishes());
  // terms have valuation -7*4 at worst, so the residual is known well past zero
  EXPECT_GT(r.precision(), 0);
}

TEST(Branch, StableUnderDoubling) {
  auto c = make_curve(Family::Gr, {2, 1, 3, Mode::Gr}, build_field(2, 6));
  const Field& f = *c->field;
  ProjPoint inf = ProjPoint::make(f, f.one(), f.zero(), f.zero());
  auto a = branch_expand(*c, inf, 36), b = branch_expand(*c, inf, 72);
  EXPECT_EQ(a.x.valuation(), b.x.valuation());
  EXPECT_EQ(a.y.valuation(), b.y.valuation());
  EXPECT_EQ(*a.x.valuation(), -9);
  EXPECT_EQ(*a.y.valuation(), -2);
  // the lower-precision series is a truncation of the higher one
  EXPECT_EQ(b.x.truncated(a.x.precision()), a.x);
}

TEST(Branch, ErrorsReported) {
  auto f = build_field(5, 1);
  // y^2 - x^2 y + x^5: two edges at the origin
  BiPoly g = BiPoly::monomial(f, f->one(), 0, 2) - BiPoly::monomial(f, f->one(), 2, 1) + BiPoly::monomial(f, f->one(), 5, 0);
  auto c = make_curve(g);
  EXPECT_THROW(branch_expand(*c, ProjPoint::affine(*f, f->zero(), f->zero()), 10), MathError);
  // node y^2 - x^2 - x^3
  BiPoly node = BiPoly::monomial(f, f->one(), 0, 2) - BiPoly::monomial(f, f->one(), 2, 0) - BiPoly::monomial(f, f->one(), 3, 0);
  EXPECT_THROW(branch_expand(*make_curve(node), ProjPoint::affine(*f, f->zero(), f->zero()), 10), MathError);
  EXPECT_THROW(branch_expand(*c, ProjPoint::affine(*f, f->one(), f->one()), 10), MathError);
  EXPECT_THROW(Place(c, ProjPoint::affine(*f, f->zero(), f->zero()), "bad"), MathError);
}

TEST(IntersectionMultiplicity, SecantAndTangent) {
  auto c = fm(3, 1, 2);
  const Field& f = *c->field;
  ProjPoint o = ProjPoint::affine(f, f.zero(), f.zero());
  // secant y = x through the origin, tangent x = 0
  EXPECT_EQ(intersection_multiplicity(*c, {f.one(), f.neg(f.one()), f.zero()}, o), 1);
  EXPECT_EQ(intersection_multiplicity(*c, {f.one(), f.zero(), f.zero()}, o), 2);
  // line at infinity meets the cubic only at (0:1:0), with multiplicity 3
  ProjPoint inf = ProjPoint::make(f, f.zero(), f.one(), f.zero());
  EXPECT_EQ(intersection_multiplicity(*c, {f.zero(), f.zero(), f.one()}, inf), 3);
  EXPECT_THROW(intersection_multiplicity(*c, {f.zero(), f.one(), f.one()}, o), MathError);
}

TEST(Laurent, InverseTimesSelfIsOne) {
  auto f = build_field(7, 1);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    std::vector<Elem> c(12);
    for (auto& e : c) e = f->random(rng);
    c[0] = f->one();
    LaurentSeries a(f, -3, c, 9);
    LaurentSeries prod = a * a.inverse();
    EXPECT_EQ(prod.valuation(), 0);
    EXPECT_EQ(prod.precision(), 12);
    EXPECT_EQ(prod.coeffs(), std::vector<Elem>{f->one()});
  }
}

TEST(Laurent, PrecisionBookkeeping) {
  auto f = build_field(5, 1);
  LaurentSeries a(f, 2, {f->one(), f->one()}, 6);  // t^2 + t^3 + O(t^6)
  LaurentSeries b = LaurentSeries::monomial(f, f->one(), -4);
  EXPECT_EQ((a * b).precision(), 2);
  EXPECT_EQ((a - a).valuation(), std::nullopt);
  EXPECT_EQ((a - a).precision(), 6);
  EXPECT_EQ((a + b).valuation(), -4);
  EXPECT_THROW(LaurentSeries::zero(f, 5).inverse(), MathError);
}

TEST(Branch, LeadingTermWithoutRationalRoot) {
  // Em(3,2) at (0, omega): -x^4 dominates, and Z^4 = const has no root in F_9
  auto c = make_curve(Family::Em, {3, 1, 2, Mode::Fm}, build_field(3, 2));
  const FieldPtr& fp = c->field;
  const Field& f = *fp;
  int checked = 0;
  for (uint32_t v = 1; v < f.order(); ++v) {
    Elem w{v};
    if (f.add(f.pow(w, 2), f.one()).v != 0) continue;
    Place P(c, ProjPoint::affine(f, f.zero(), w), "omega");
    EXPECT_TRUE(eval_series(c->affine, P.expansion().x, P.expansion().y).vanishes());
    EXPECT_EQ(vx(P), 1);
    EXPECT_EQ(P.valuation(BiPoly::y(fp) - BiPoly::constant(fp, w)), 4);
    ++checked;
  }
  EXPECT_EQ(checked, 2);
}
