#include <gtest/gtest.h>

#include "galpts/function_field.hpp"

using namespace galpts;

namespace {

CurvePtr curve(Family fam, uint32_t p, unsigned n, unsigned e, unsigned k) {
  return make_curve(fam, {p, n, e, fam == Family::Gr ? Mode::Gr : Mode::Fm}, build_field(p, n * k));
}

BiPoly random_bipoly(const FieldPtr& f, std::mt19937_64& rng, int max_deg, int terms) {
  BiPoly b(f);
  std::uniform_int_distribution<int> deg(0, max_deg);
  for (int t = 0; t < terms; ++t) b += BiPoly::monomial(f, f->random(rng), deg(rng), deg(rng));
  return b;
}

}  // namespace

TEST(NormalForm, ReducesDefiningRelation) {
  auto c = curve(Family::Fm, 3, 1, 2, 2);
  const FieldPtr& f = c->field;
  FFElem ym = FFElem::from_poly(c, BiPoly::y(f).pow(2));
  BiPoly rhs = BiPoly::monomial(f, f->one(), 3, 0) + BiPoly::x(f);
  EXPECT_EQ(ym, FFElem::from_poly(c, rhs));
  EXPECT_EQ(ym.num()[1].degree(), -1);
  // y^(m+1) / y
  EXPECT_EQ(normal_form(c, BiPoly::y(f).pow(3), BiPoly::y(f)), ym);
  EXPECT_THROW(normal_form(c, BiPoly::constant(f, f->one()), BiPoly::y(f).pow(2) - rhs), MathError);
}

TEST(NormalForm, IdempotentOnRandomExpressions) {
  std::mt19937_64 rng(17);
  for (auto c : {curve(Family::Fm, 5, 1, 3, 2), curve(Family::Gr, 2, 1, 2, 4), curve(Family::Em, 3, 1, 2, 2)}) {
    for (int i = 0; i < 100; ++i) {
      BiPoly n = random_bipoly(c->field, rng, 7, 5), d = random_bipoly(c->field, rng, 3, 2);
      if (FFElem::from_poly(c, d).is_zero()) continue;
      FFElem a = normal_form(c, n, d);
      EXPECT_EQ(normal_form(c, a.numerator(), a.denominator()), a);
    }
  }
}

TEST(FFElem, FieldAxiomsSampled) {
  std::mt19937_64 rng(23);
  auto c = curve(Family::Fm, 7, 1, 4, 2);
  for (int i = 0; i < 20; ++i) {
    FFElem a = FFElem::from_poly(c, random_bipoly(c->field, rng, 5, 4));
    FFElem b = normal_form(c, random_bipoly(c->field, rng, 4, 3), random_bipoly(c->field, rng, 2, 2));
    if (a.is_zero() || b.is_zero()) continue;
    EXPECT_EQ(a * a.inverse(), FFElem::constant(c, c->field->one()));
    EXPECT_EQ((a + b) * b.inverse(), a / b + FFElem::constant(c, c->field->one()));
    EXPECT_EQ(a - a, FFElem(c));
    EXPECT_EQ(a.pow(3) * a.pow(-2), a);
  }
}

TEST(FFElem, ValuationAtPlaces) {
  auto c = curve(Family::Fm, 3, 1, 2, 2);
  const Field& f = *c->field;
  Place inf(c, ProjPoint::make(f, f.zero(), f.one(), f.zero()), "P_inf");
  FFElem y = FFElem::y(c);
  EXPECT_EQ(valuation(inf, y.inverse()), 3);
  EXPECT_EQ(valuation(inf, FFElem::x(c).pow(2) / y), -1);  // x^s/y with s = 2
  EXPECT_EQ(valuation(inf, FFElem::constant(c, f.one())), 0);
  EXPECT_THROW(valuation(inf, FFElem(c)), MathError);
}

TEST(ExtensionDegree, KnownDegrees) {
  ExtensionDegreeReport rep;
  auto fm = curve(Family::Fm, 3, 1, 2, 2);
  EXPECT_EQ(extension_degree(FFElem::y(fm).inverse(), 0, &rep), 3);
  EXPECT_EQ(rep.eliminant, rep.fibers);
  EXPECT_EQ(rep.samples.size(), 5u);
  auto gr = curve(Family::Gr, 2, 1, 2, 4);
  EXPECT_EQ(extension_degree(FFElem::x(gr)), 5);
  auto em = curve(Family::Em, 3, 1, 2, 2);
  EXPECT_EQ(extension_degree(FFElem::y(em)), 4);
}

TEST(ExtensionDegree, CoordinateFunctions) {
  // [K(C):K(x)] = deg_y f and [K(C):K(y)] = deg_x f for these curves
  auto fm = curve(Family::Fm, 5, 1, 3, 2);
  EXPECT_EQ(extension_degree(FFElem::x(fm)), 3);
  EXPECT_EQ(extension_degree(FFElem::y(fm)), 5);
  FFElem t = FFElem::x(fm).pow(2) / FFElem::y(fm);  // x^s / y
  EXPECT_EQ(extension_degree(t), 5);
  EXPECT_THROW(extension_degree(FFElem::constant(fm, fm->field->one())), MathError);
}

TEST(ExtensionDegree, MethodsAgreeOnRandomFunctions) {
  std::mt19937_64 rng(31);
  auto c = curve(Family::Fm, 5, 1, 2, 2);
  for (int i = 0; i < 6; ++i) {
    FFElem t = normal_form(c, random_bipoly(c->field, rng, 3, 3), random_bipoly(c->field, rng, 2, 2));
    if (t.is_constant()) continue;
    std::mt19937_64 r1(i), r2(i + 100);
    EXPECT_EQ(extension_degree_eliminant(t, r1), extension_degree_fibers(t, r2));
  }
}
