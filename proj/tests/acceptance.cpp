// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "galpts/galois.hpp"
#include "galpts/suite.hpp"

using namespace galpts;

namespace {

struct Tuple {
  uint32_t p;
  unsigned n, e;
};

const std::vector<Tuple> kFmGrid{{3, 1, 2}, {5, 1, 2}, {5, 1, 3}, {7, 1, 2}, {7, 1, 4}, {2, 3, 3}};
const std::vector<Tuple> kGrGrid{{2, 1, 2}, {2, 1, 3}, {3, 1, 2}};
const std::vector<Tuple> kExclusionGrid{{5, 1, 2}, {5, 1, 3}, {7, 1, 2}, {7, 1, 4}, {2, 3, 3}};

std::string label(const Tuple& t) {
  return "(" + std::to_string(ipow(t.p, t.n)) + "," + std::to_string(t.e) + ")";
}

// Every report produced below, kept for the cross-method criterion.
std::vector<Report> g_reports;

struct Line {
  bool ok = true;
  std::ostringstream detail;
};

Line run_grid(const std::vector<Tuple>& grid, const std::string& selector, double budget_s) {
  Line L;
  int passed = 0;
  double worst = 0;
  for (const auto& t : grid) {
    RunConfig cfg;
    cfg.p = t.p;
    cfg.n = t.n;
    cfg.selector = selector;
    if (selector == "thm2")
      cfg.r = t.e;
    else
      cfg.m = t.e;
    auto t0 = std::chrono::steady_clock::now();
    Report rep = run(cfg);
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    worst = std::max(worst, s);
    bool ok = rep.verdict == "pass" && !rep.checks.empty() && s < budget_s;
    if (ok) {
      ++passed;
    } else {
      L.ok = false;
      L.detail << " " << label(t) << ":" << rep.verdict;
      for (const auto& c : rep.checks)
        if (c.failed()) L.detail << " [" << c.name << ": " << c.witness << "]";
      if (!rep.error.empty()) L.detail << " [" << rep.error << "]";
      if (s >= budget_s) L.detail << " [over budget " << s << " s]";
    }
    g_reports.push_back(std::move(rep));
  }
  std::ostringstream head;
  head << passed << "/" << grid.size() << " tuples, slowest " << worst << " s";
  L.detail.str(head.str() + L.detail.str());
  return L;
}

Line criterion6() {
  Line L;
  int pairs = 0, agree = 0;
  for (const auto& r : g_reports)
    for (const auto& c : r.checks)
      if (c.name.rfind("extension degree methods agree", 0) == 0) {
        ++pairs;
        if (c.status == "pass") ++agree;
        else L.detail << " [" << c.name << ": " << c.witness << "]";
      }
  L.ok = pairs >= 18 && agree == pairs;
  std::ostringstream head;
  head << agree << "/" << pairs << " function/curve pairs agree";
  L.detail.str(head.str() + L.detail.str());
  return L;
}

BiPoly random_poly(const FieldPtr& f, std::mt19937_64& rng, int dx, int dy) {
  BiPoly b(f);
  std::uniform_int_distribution<int> ix(0, dx), iy(0, dy);
  for (int k = 0; k < 4; ++k) b.set(ix(rng), iy(rng), f->random(rng));
  return b;
}

Line criterion7() {
  Line L;
  int latin = 0, invol = 0, contra = 0, normal = 0, vals = 0;
  auto fail = [&](const std::string& what) {
    L.ok = false;
    L.detail << " [" << what << "]";
  };
  std::mt19937_64 rng(2024);

  for (const auto& t : kFmGrid) {
    auto pc = make_constants({t.p, t.n, t.e, Mode::Fm});
    auto fm = make_curve(Family::Fm, pc.params, pc.field);
    auto em = make_curve(Family::Em, pc.params, pc.field);
    RatMap a = make_alpha(fm);
    AutGroup G1 = make_G1(Theorem::T1a, pc, fm);
    AutGroup G2 = conjugate(G1, a, ConjSide::HinvGH, "G2");
    AutGroup H1 = make_G1(Theorem::T1b, pc, em);
    RatMap b = make_beta(em, pc.beta_lambda);
    AutGroup H2 = conjugate(H1, b, ConjSide::HGHinv, "H2");
    for (const AutGroup* G : {&G1, &G2, &H1, &H2}) {
      ++latin;
      if (!G->latin_square()) fail("latin " + G->name + " " + label(t));
    }
    ++invol;
    if (!same_map(compose(a, a), identity_map(fm))) fail("alpha involution " + label(t));
  }
  for (const auto& t : kGrGrid) {
    auto pc = make_constants({t.p, t.n, t.e, Mode::Gr});
    auto gr = make_curve(Family::Gr, pc.params, pc.field);
    AutGroup G1 = make_G1(Theorem::T2, pc, gr);
    AutGroup G2 = conjugate(G1, make_gamma(gr, pc), ConjSide::HGHinv, "G2");
    for (const AutGroup* G : {&G1, &G2}) {
      ++latin;
      if (!G->latin_square()) fail("latin " + G->name + " " + label(t));
    }
  }

  // contravariance (a o b)^* f = b^*(a^* f) over the union of both groups
  {
    auto pc = make_constants({5, 1, 3, Mode::Fm});
    auto fm = make_curve(Family::Fm, pc.params, pc.field);
    AutGroup G1 = make_G1(Theorem::T1a, pc, fm);
    AutGroup G2 = conjugate(G1, make_alpha(fm), ConjSide::HinvGH, "G2");
    std::vector<RatMap> all(G1.elems);
    all.insert(all.end(), G2.elems.begin(), G2.elems.end());
    std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
    while (contra < 100) {
      FFElem f = normal_form(fm, random_poly(pc.field, rng, 3, 2), random_poly(pc.field, rng, 2, 1) +
                                                                       BiPoly::constant(pc.field, pc.field->one()));
      const RatMap &a = all[pick(rng)], &b = all[pick(rng)];
      ++contra;
      if (!(pullback(compose(a, b), f) == pullback(b, pullback(a, f)))) fail("contravariance #" + std::to_string(contra));
    }
  }

  // normal form is idempotent
  for (const auto& t : kFmGrid) {
    auto pc = make_constants({t.p, t.n, t.e, Mode::Fm});
    auto em = make_curve(Family::Em, pc.params, pc.field);
    int done = 0;
    while (done < 17 && normal < 100) {
      BiPoly den = random_poly(pc.field, rng, 3, 3);
      FFElem e(em);
      try {
        e = normal_form(em, random_poly(pc.field, rng, 4, 4), den);
      } catch (const MathError&) {
        continue;  // denominator vanishes on the curve
      }
      ++done;
      ++normal;
      if (!(normal_form(em, e.numerator(), e.denominator()) == e)) fail("normal form " + label(t));
    }
  }

  // valuations agree at N and 2N wherever both truncations are determinate
  for (const auto& t : kFmGrid) {
    auto pc = make_constants({t.p, t.n, t.e, Mode::Fm});
    auto fm = make_curve(Family::Fm, pc.params, pc.field);
    const Field& k = *pc.field;
    std::vector<Place> places;
    places.emplace_back(fm, ProjPoint::make(k, k.zero(), k.one(), k.zero()), "P_inf");
    for (Elem l : pc.lambda_set) places.emplace_back(fm, ProjPoint::affine(k, l, k.zero()), "P_lambda");
    for (const auto& P : places) {
      for (int j = 0; j < 3; ++j) {
        BiPoly g = random_poly(pc.field, rng, 3, 3);
        int N = P.base_precision();
        auto v1 = eval_series(g, P.expansion(N).x, P.expansion(N).y).valuation();
        auto v2 = eval_series(g, P.expansion(2 * N).x, P.expansion(2 * N).y).valuation();
        if (!v1 || !v2) continue;
        ++vals;
        if (*v1 != *v2) fail("valuation at " + P.label() + " " + label(t));
      }
    }
  }
  if (vals < 20) fail("too few determinate valuations");
  std::ostringstream head;
  head << latin << " group tables, " << invol << " involutions, " << contra << " contravariance pairs, " << normal
       << " normal forms, " << vals << " valuation pairs";
  L.detail.str(head.str() + L.detail.str());
  return L;
}

}  // namespace

int main() {
  struct Item {
    const char* title;
    std::function<Line()> fn;
  };
  std::vector<Item> items{
      {"1 inner Galois points on Fm", [] { return run_grid(kFmGrid, "thm1a", 60); }},
      {"2 Fm -> Em birational chain", [] { return run_grid(kFmGrid, "lemma1", 60); }},
      {"3 outer Galois points on Em", [] { return run_grid(kFmGrid, "thm1b", 60); }},
      {"4 outer Galois points on Gr", [] { return run_grid(kGrGrid, "thm2", 120); }},
      {"5 exclusions on the image of Fm", [] { return run_grid(kExclusionGrid, "prop1", 60); }},
      {"6 extension degree methods agree", criterion6},
      {"7 property suites", criterion7},
  };
  int failures = 0;
  for (const auto& it : items) {
    Line L;
    try {
      L = it.fn();
    } catch (const std::exception& e) {
      L.ok = false;
      L.detail << "exception: " << e.what();
    }
    failures += !L.ok;
    std::printf("%s criterion %s: %s\n", L.ok ? "PASS" : "FAIL", it.title, L.detail.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
