#include <gtest/gtest.h>

#include "galpts/galois.hpp"

using namespace galpts;

namespace {

struct T1a {
  FamilyConstants pc;
  CurvePtr fm;
  FFElem f, g;
  EmbeddingResult emb;
};

T1a setup(uint32_t p, unsigned n, unsigned m) {
  T1a s;
  s.pc = make_constants({p, n, m, Mode::Fm});
  s.fm = make_curve(Family::Fm, s.pc.params, s.pc.field);
  FFElem x = FFElem::x(s.fm), y = FFElem::y(s.fm);
  s.f = y.inverse();
  s.g = x.pow(int64_t(s.pc.params.s())) / y;
  s.emb = build_embedding(s.f, s.g, int(s.pc.params.q() + 1), 7);
  return s;
}

}  // namespace

TEST(LinearRelations, FindsTheCurveEquation) {
  auto s = setup(3, 1, 2);
  FFElem x = FFElem::x(s.fm), y = FFElem::y(s.fm);
  FFElem one = FFElem::constant(s.fm, s.pc.field->one());
  // y^2 - x^3 - x = 0 is the only relation among these
  auto rel = linear_relations({y * y, x.pow(3), x, one});
  ASSERT_EQ(rel.size(), 1u);
  const Field& k = *s.pc.field;
  EXPECT_EQ(rel[0][1], k.neg(rel[0][0]));
  EXPECT_EQ(rel[0][2], k.neg(rel[0][0]));
  EXPECT_EQ(rel[0][3], k.zero());
  EXPECT_TRUE(linear_relations({x, y, one}).empty());
}

TEST(Embedding, ImageOfSmallestCase) {
  auto s = setup(3, 1, 2);
  EXPECT_EQ(s.emb.image_degree, 4);
  EXPECT_EQ(s.emb.relation_count, 1);
  EXPECT_TRUE(s.emb.birational);
  EXPECT_TRUE(s.emb.injective_samples);
  EXPECT_TRUE(s.emb.sample_points_ok);
  const Field& k = *s.pc.field;
  Place Pinf(s.fm, ProjPoint::make(k, k.zero(), k.one(), k.zero()), "P_inf");
  Place P0(s.fm, ProjPoint::affine(k, k.zero(), k.zero()), "P_0");
  EXPECT_EQ(image_of(s.emb.map, Pinf), ProjPoint::make(k, k.zero(), k.one(), k.zero()));
  EXPECT_EQ(image_of(s.emb.map, P0), ProjPoint::make(k, k.one(), k.zero(), k.zero()));
}

TEST(Classify, InnerOuterAndMultiplicity) {
  auto pc = make_constants({3, 1, 2, Mode::Fm});
  const FieldPtr& f = pc.field;
  const Field& k = *f;
  // nodal cubic y^2 = x^2 (x + 1)
  BiPoly node = BiPoly::y(f).pow(2) - BiPoly::x(f).pow(2) * (BiPoly::x(f) + BiPoly::constant(f, k.one()));
  auto C = make_curve(node, Family::Other);
  auto origin = ProjPoint::affine(k, k.zero(), k.zero());
  EXPECT_EQ(classify_point(*C, origin), PointKind::InnerSingular);
  EXPECT_EQ(point_multiplicity(*C, origin), 2);
  auto onc = ProjPoint::affine(k, k.neg(k.one()), k.zero());
  EXPECT_EQ(classify_point(*C, onc), PointKind::InnerSmooth);
  EXPECT_EQ(point_multiplicity(*C, onc), 1);
  auto off = ProjPoint::affine(k, k.one(), k.zero());
  EXPECT_EQ(classify_point(*C, off), PointKind::Outer);
  EXPECT_EQ(point_multiplicity(*C, off), 0);
}

TEST(Certificate, BothInnerCentersOnFm52) {
  auto s = setup(5, 1, 2);
  const Field& k = *s.pc.field;
  AutGroup G1 = make_G1(Theorem::T1a, s.pc, s.fm);
  AutGroup G2 = conjugate(G1, make_alpha(s.fm), ConjSide::HinvGH, "G2");
  Place Pinf(s.fm, ProjPoint::make(k, k.zero(), k.one(), k.zero()), "P_inf");
  Place P0(s.fm, ProjPoint::affine(k, k.zero(), k.zero()), "P_0");
  auto c1 = galois_certify(ProjPoint::make(k, k.zero(), k.one(), k.zero()), s.f, G1, s.f, s.g, *s.emb.image, &Pinf);
  EXPECT_TRUE(c1.ok());
  EXPECT_EQ(c1.kind, PointKind::InnerSmooth);
  EXPECT_EQ(c1.ramification, 5);
  auto c2 = galois_certify(ProjPoint::make(k, k.one(), k.zero(), k.zero()), s.g, G2, s.f, s.g, *s.emb.image, &P0);
  EXPECT_TRUE(c2.ok());
  EXPECT_EQ(c2.ramification, 5);
  // wrong group for the center: t is not fixed
  auto bad = galois_certify(ProjPoint::make(k, k.one(), k.zero(), k.zero()), s.g, G1, s.f, s.g, *s.emb.image, &P0);
  EXPECT_FALSE(bad.fixes_t);
  EXPECT_FALSE(bad.ok());
}

TEST(Ramification, OrdinaryPlacesOnFm53) {
  auto s = setup(5, 1, 3);
  const Field& k = *s.pc.field;
  for (Elem l : s.pc.lambda_set) {
    if (l.v == 0) continue;
    Place Q(s.fm, ProjPoint::affine(k, l, k.zero()), "Q");
    EXPECT_EQ(ramification_index(image_of(s.emb.map, Q), Q, s.f, s.g), 2);
  }
}

TEST(Exclusions, ItemsHoldAndSmallestCaseRejected) {
  for (auto [p, m] : {std::pair{5u, 2u}, std::pair{5u, 3u}}) {
    auto pc = make_constants({p, 1, m, Mode::Fm});
    for (auto& it : proposition_exclusion_suite(pc)) EXPECT_TRUE(it.ok) << it.name << " " << it.witness;
  }
  EXPECT_THROW(proposition_exclusion_suite(make_constants({3, 1, 2, Mode::Fm})), ConfigError);
}
