#include <gtest/gtest.h>

#include "galpts/bipoly.hpp"

using namespace galpts;

namespace {

BiPoly bp(const FieldPtr& f, std::initializer_list<std::tuple<int64_t, uint32_t, uint32_t>> terms) {
  BiPoly b(f);
  for (auto [c, i, j] : terms) b += BiPoly::monomial(f, f->from_int(c), i, j);
  return b;
}

BiPoly random_bipoly(const FieldPtr& f, std::mt19937_64& rng, int max_deg, int terms) {
  BiPoly b(f);
  std::uniform_int_distribution<int> deg(0, max_deg);
  for (int t = 0; t < terms; ++t) {
    uint32_t i = deg(rng), j = deg(rng);
    if (static_cast<int>(i + j) > max_deg) continue;
    b += BiPoly::monomial(f, f->random(rng), i, j);
  }
  return b;
}

}  // namespace

TEST(Resultant, CommonRootOnlyAtOrigin) {
  auto f = build_field(5, 1);
  // Res_y(y - x, y - 2x) is proportional to x
  auto r = resultant(bp(f, {{1, 0, 1}, {-1, 1, 0}}), bp(f, {{1, 0, 1}, {-2, 1, 0}}), Var::Y);
  EXPECT_EQ(r.degree(), 1);
  EXPECT_EQ(r.coeff(0), f->zero());
}

TEST(Resultant, SubstitutesLinearFactor) {
  auto f = build_field(7, 1);
  auto r = resultant(bp(f, {{1, 0, 2}, {-1, 1, 0}}), bp(f, {{1, 0, 1}, {-1, 0, 0}}), Var::Y);
  EXPECT_EQ(r.monic(), UniPoly::from_ints(f, {-1, 1}));
}

TEST(Resultant, EliminantForCurveAndLine) {
  // Res_y(y^2 - x^3 - x, y - t x^2) = t^2 x^4 - x^3 - x for a constant t
  auto f = build_field(3, 2);
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 5; ++trial) {
    Elem t = f->random(rng);
    if (t.v == 0) continue;
    BiPoly curve = bp(f, {{1, 0, 2}, {-1, 3, 0}, {-1, 1, 0}});
    BiPoly line = BiPoly::y(f) - BiPoly::monomial(f, t, 2, 0);
    UniPoly r = resultant(curve, line, Var::Y);
    EXPECT_EQ(r.degree(), 4);
    UniPoly expected = UniPoly(f, {Elem{}, f->neg(f->one()), Elem{}, f->neg(f->one()), f->mul(t, t)});
    EXPECT_EQ(r.monic(), expected.monic());
    // evaluation cross-check
    for (int k = 0; k < 10; ++k) {
      Elem a = f->random(rng);
      EXPECT_EQ(r.eval(a), resultant(curve.at_x(a), line.at_x(a), 2, 1));
    }
  }
}

TEST(Resultant, RejectsDegreeZeroInput) {
  auto f = build_field(3, 1);
  EXPECT_THROW(resultant(BiPoly::x(f), BiPoly::y(f), Var::Y), MathError);
}

TEST(Resultant, BareissAndInterpolationAgree) {
  std::mt19937_64 rng(42);
  auto f = build_field(2, 8);
  for (int trial = 0; trial < 20; ++trial) {
    BiPoly a = random_bipoly(f, rng, 6, 8) + BiPoly::monomial(f, f->one(), 0, 3);
    BiPoly b = random_bipoly(f, rng, 5, 6) + BiPoly::monomial(f, f->one(), 1, 2);
    EXPECT_EQ(resultant_bareiss(a, b, Var::Y), resultant_interpolated(a, b, Var::Y));
    EXPECT_EQ(resultant_bareiss(a, b, Var::X), resultant_interpolated(a, b, Var::X));
  }
}

TEST(Resultant, SpecialisationProperty) {
  std::mt19937_64 rng(8);
  auto f = build_field(5, 2);
  for (int trial = 0; trial < 10; ++trial) {
    BiPoly a = random_bipoly(f, rng, 5, 7) + BiPoly::monomial(f, f->one(), 0, 4);
    BiPoly b = random_bipoly(f, rng, 4, 5) + BiPoly::monomial(f, f->one(), 2, 2);
    UniPoly r = resultant(a, b, Var::Y);
    for (int k = 0; k < 10; ++k) {
      Elem x0 = f->random(rng);
      EXPECT_EQ(r.eval(x0), resultant(a.at_x(x0), b.at_x(x0), a.deg_y(), b.deg_y()));
    }
  }
}

TEST(Homogenize, SmallCubic) {
  auto f = build_field(5, 1);
  TernaryForm F = homogenize(bp(f, {{1, 0, 2}, {-1, 3, 0}, {-1, 1, 0}}), 3);
  TernaryForm expected(f, 3);
  expected.set({0, 2, 1}, f->one());
  expected.set({3, 0, 0}, f->from_int(-1));
  expected.set({1, 0, 2}, f->from_int(-1));
  EXPECT_EQ(F, expected);
}

TEST(Homogenize, PaddingToLargerDegree) {
  // y^m - x^q - x padded to degree q+1: Y^m Z^(q+1-m) - X^q Z - X Z^q, (q,m) = (5,3)
  auto f = build_field(5, 1);
  TernaryForm F = homogenize(bp(f, {{1, 0, 3}, {-1, 5, 0}, {-1, 1, 0}}), 6);
  EXPECT_EQ(F.coeff({0, 3, 3}), f->one());
  EXPECT_EQ(F.coeff({5, 0, 1}), f->from_int(-1));
  EXPECT_EQ(F.coeff({1, 0, 5}), f->from_int(-1));
  EXPECT_EQ(F.terms().size(), 3u);
  EXPECT_THROW(homogenize(bp(f, {{1, 0, 3}, {-1, 5, 0}}), 4), MathError);
}

TEST(Homogenize, RoundTripRandom) {
  std::mt19937_64 rng(3);
  auto f = build_field(3, 3);
  for (int i = 0; i < 20; ++i) {
    BiPoly b = random_bipoly(f, rng, 7, 9);
    if (b.is_zero()) continue;
    EXPECT_EQ(dehomogenize(homogenize(b, b.total_degree()), 2), b);
  }
}

TEST(Squarefree, RepeatedLinear) {
  auto f = build_field(3, 1);
  EXPECT_EQ(squarefree_part(UniPoly::from_ints(f, {1, -2, 1})), UniPoly::from_ints(f, {-1, 1}));
}

TEST(Squarefree, InseparableCube) {
  auto f = build_field(3, 1);
  // x^3 - 1 = (x - 1)^3 in characteristic 3
  EXPECT_EQ(squarefree_part(UniPoly::from_ints(f, {-1, 0, 0, 1})), UniPoly::from_ints(f, {-1, 1}));
  EXPECT_THROW(squarefree_part(UniPoly(f)), MathError);
}

TEST(Squarefree, IrreducibleUnchanged) {
  auto f = build_field(3, 1);
  UniPoly g = UniPoly::from_ints(f, {1, 0, 1});  // x^2 + 1 irreducible over F_3
  EXPECT_EQ(squarefree_part(g), g);
}

TEST(Squarefree, MixedMultiplicities) {
  auto f = build_field(2, 4);
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    UniPoly a(f, {f->random(rng), f->one()}), b(f, {f->random(rng), f->one()}), c(f, {f->random(rng), f->random(rng), f->one()});
    if (a == b) continue;
    UniPoly g = a.pow(4) * b.pow(3) * c;
    UniPoly s = squarefree_part(g);
    EXPECT_EQ(gcd(s, s.derivative()).degree(), 0);
    EXPECT_TRUE((g % s).is_zero());
    // every root of g is a root of s
    for (Elem r : find_roots(g)) EXPECT_EQ(s.eval(r), f->zero());
  }
}

TEST(UniPoly, DivmodIdentity) {
  std::mt19937_64 rng(2);
  auto f = build_field(7, 2);
  for (int i = 0; i < 30; ++i) {
    std::vector<Elem> a(9), b(4);
    for (auto& e : a) e = f->random(rng);
    for (auto& e : b) e = f->random(rng);
    UniPoly pa(f, a), pb(f, b);
    if (pb.is_zero()) continue;
    auto [q, r] = pa.divmod(pb);
    EXPECT_EQ(q * pb + r, pa);
    EXPECT_LT(r.degree(), pb.degree());
  }
}

TEST(UniPoly, InterpolationReproducesPolynomial) {
  std::mt19937_64 rng(4);
  auto f = build_field(2, 6);
  std::vector<Elem> c(12);
  for (auto& e : c) e = f->random(rng);
  UniPoly g(f, c);
  std::vector<Elem> xs, ys;
  for (uint32_t v = 0; v < 12; ++v) {
    xs.push_back(Elem{v});
    ys.push_back(g.eval(Elem{v}));
  }
  EXPECT_EQ(interpolate(f, xs, ys), g);
}
