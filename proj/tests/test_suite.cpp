#include <gtest/gtest.h>

#include <sstream>

#include "galpts/suite.hpp"

using namespace galpts;

namespace {

const CheckRecord* find(const Report& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST(Grid, CommentsBlanksAndBadLines) {
  std::istringstream in("# header\n\n3 1 2 thm1a # trailing\n  2 1 3 thm2\n5 x 2 thm1a\n7 1 2\n");
  auto g = parse_grid(in);
  ASSERT_EQ(g.size(), 4u);
  EXPECT_EQ(g[0].line, 3);
  EXPECT_EQ(g[0].p, 3u);
  EXPECT_EQ(g[0].e, 2u);
  EXPECT_EQ(g[0].selector, "thm1a");
  EXPECT_TRUE(g[1].parse_error.empty());
  EXPECT_FALSE(g[2].parse_error.empty());
  EXPECT_FALSE(g[3].parse_error.empty());
}

TEST(Run, RejectsBeforeComputing) {
  RunConfig cfg;
  cfg.p = 2;
  cfg.n = 2;
  cfg.m = 2;
  cfg.selector = "thm1a";
  Report r = run(cfg);
  EXPECT_EQ(r.verdict, "rejected");
  EXPECT_TRUE(r.checks.empty());
  EXPECT_EQ(r.exit_code(), 2);
  cfg.m.reset();
  EXPECT_THROW(validate(cfg), ConfigError);
}

TEST(Run, SmallestGrCase) {
  RunConfig cfg;
  cfg.p = 2;
  cfg.r = 2;
  cfg.selector = "thm2";
  Report r = run(cfg);
  EXPECT_EQ(r.verdict, "pass");
  EXPECT_EQ(r.exit_code(), 0);
  ASSERT_NE(find(r, "image degree"), nullptr);
  EXPECT_NE(find(r, "image degree")->witness.find("deg=5"), std::string::npos);
  EXPECT_EQ(find(r, "thm2: divisor condition")->witness, "5 Q_inf = 5 Q_inf");
  for (const auto& c : r.checks) EXPECT_FALSE(c.anchor.empty()) << c.name;
  EXPECT_EQ(r.to_json().dump(), run(cfg).to_json().dump());
}

TEST(Sweep, IsolatesRejectedTuples) {
  std::istringstream in("3 1 2 lemma1\n2 2 2 lemma1\n");
  auto sr = sweep(parse_grid(in), RunConfig{});
  ASSERT_EQ(sr.reports.size(), 2u);
  EXPECT_EQ(sr.reports[0].verdict, "pass");
  EXPECT_EQ(sr.reports[1].verdict, "rejected");
  EXPECT_EQ(sr.exit_code(), 2);
  EXPECT_EQ(sweep({}, RunConfig{}).exit_code(), 0);
}
