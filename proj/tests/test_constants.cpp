#include <gtest/gtest.h>

#include <set>

#include "galpts/constants.hpp"
#include "galpts/unipoly.hpp"

using namespace galpts;

TEST(Constants, SmallestFmCase) {
  auto pc = make_constants({3, 1, 2, Mode::Fm});
  const auto& f = *pc.field;
  EXPECT_EQ(f.order(), 9u);
  EXPECT_EQ(pc.lambda_set.size(), 3u);
  EXPECT_EQ(pc.zeta_set.size(), 4u);
  EXPECT_EQ(f.add(f.pow(pc.a_root, 3), pc.a_root), f.one());
  EXPECT_LE(pc.degrees_used.at("a"), 3u);
  // oracle: the lambda set is {0, i, -i} by scanning F_9
  std::vector<Elem> scan;
  for (uint32_t v = 0; v < 9; ++v)
    if (f.add(f.pow(Elem{v}, 3), Elem{v}) == f.zero()) scan.push_back(Elem{v});
  EXPECT_EQ(pc.lambda_set, scan);
  for (Elem l : scan)
    if (l != f.zero()) EXPECT_EQ(f.mul(l, l), f.neg(f.one()));
}

TEST(Constants, RejectsNonDivisor) {
  EXPECT_THROW(make_constants({3, 1, 3, Mode::Fm}), ConfigError);
  EXPECT_THROW(make_constants({2, 2, 2, Mode::Fm}), ConfigError);
  EXPECT_THROW(make_constants({4, 1, 2, Mode::Fm}), ConfigError);
  EXPECT_THROW(make_constants({2, 1, 1, Mode::Gr}), ConfigError);
}

TEST(Constants, GrSmallestCase) {
  auto pc = make_constants({2, 1, 2, Mode::Gr});
  const auto& f = *pc.field;
  EXPECT_EQ(f.order(), 16u);
  EXPECT_NE(pc.b, f.zero());
  EXPECT_EQ(f.pow(pc.b, 15), f.one());
  EXPECT_EQ(f.add(f.mul(pc.c, pc.c), pc.c), f.pow(pc.b, 5));
  // g_b(y) = b^4 y + b^8 y^2 in characteristic 2
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    Elem y = f.random(rng);
    Elem expect = f.add(f.mul(f.pow(pc.b, 4), y), f.mul(f.pow(pc.b, 8), f.mul(y, y)));
    EXPECT_EQ(gb_eval(f, 1, 2, pc.b, y), expect);
  }
  EXPECT_EQ(pc.zeta_set.size(), 5u);
}

TEST(Constants, GrGridFields) {
  struct Case { uint32_t p; unsigned r; uint64_t order; };
  for (auto c : {Case{2, 2, 16}, Case{2, 3, 64}, Case{3, 2, 6561}}) {
    auto pc = make_constants({c.p, 1, c.r, Mode::Gr});
    const auto& f = *pc.field;
    EXPECT_EQ(f.order(), c.order);
    uint64_t q = c.p, qr = ipow(q, c.r);
    Elem sign = (c.r % 2) ? f.one() : f.neg(f.one());
    EXPECT_EQ(f.frobenius(pc.b, 2 * c.r), f.mul(sign, pc.b));
    EXPECT_EQ(f.add(f.frobenius(pc.c, 1), pc.c), f.pow(pc.b, qr + 1));
    EXPECT_EQ(pc.c_prime, f.sub(gb_eval(f, 1, c.r, pc.b, pc.b), pc.c));
    EXPECT_EQ(pc.zeta_set.size(), qr + 1);
  }
}

TEST(Constants, FmGridSetSizes) {
  struct Case { uint32_t p; unsigned n, m; };
  for (auto c : {Case{3, 1, 2}, Case{5, 1, 2}, Case{5, 1, 3}, Case{7, 1, 2}, Case{7, 1, 4}, Case{2, 3, 3}}) {
    auto pc = make_constants({c.p, c.n, c.m, Mode::Fm});
    uint64_t q = ipow(c.p, c.n);
    EXPECT_EQ(pc.lambda_set.size(), q);
    EXPECT_EQ(pc.zeta_set.size(), q + 1);
    EXPECT_EQ(pc.omega_set.size(), c.m);
    EXPECT_EQ(pc.ext_degree, 2u);
    EXPECT_NE(pc.beta_lambda, pc.field->one());
    EXPECT_NE(pc.beta_lambda, pc.field->zero());
  }
}

TEST(Constants, CapTooSmall) {
  EXPECT_THROW(make_constants({3, 1, 2, Mode::Gr}, 4), ConfigError);
}
