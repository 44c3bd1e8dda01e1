#include "galpts/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <istream>
#include <sstream>

#include "galpts/galois.hpp"

namespace galpts {

namespace {

const std::vector<std::string> kSelectors{"thm1a", "thm1b", "thm2", "lemma1", "prop1", "all"};

struct Outcome {
  bool ok;
  std::string witness;
};

// A check needed an artifact that an earlier check failed to build.
struct Blocked : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class T>
const T& need(const std::optional<T>& v, const char* what) {
  if (!v) throw Blocked(what);
  return *v;
}

class Runner {
 public:
  Runner(Report& rep, bool timing) : rep_(rep), timing_(timing) {}

  void check(std::string name, std::string anchor, const std::function<Outcome()>& fn) {
    CheckRecord r{std::move(name), std::move(anchor), "", "", 0};
    auto t0 = std::chrono::steady_clock::now();
    try {
      Outcome o = fn();
      r.status = o.ok ? "pass" : "fail";
      r.witness = std::move(o.witness);
    } catch (const Blocked& b) {
      r.status = "blocked";
      r.witness = std::string("missing dependency: ") + b.what();
    } catch (const std::exception& e) {
      r.status = "error";
      r.witness = e.what();
    }
    if (timing_)
      r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    rep_.checks.push_back(std::move(r));
  }

  void note(std::string name, std::string anchor, std::string status, std::string witness) {
    rep_.checks.push_back({std::move(name), std::move(anchor), std::move(status), std::move(witness), 0});
  }

 private:
  Report& rep_;
  bool timing_;
};

std::string str(uint64_t v) { return std::to_string(v); }

std::string pt(const Field& f, const ProjPoint& p) { return p.to_string(f); }

std::vector<ProjPoint> sorted(std::vector<ProjPoint> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Records agreement of the two extension-degree methods for one function.
void ext_check(Runner& R, const std::string& what, const std::optional<ExtensionDegreeReport>& ext) {
  R.check("extension degree methods agree: " + what, "[K(C):K(t)] by eliminant = by fiber count", [&]() -> Outcome {
    const auto& e = need(ext, "extension degree report");
    std::ostringstream w;
    w << "eliminant=" << e.eliminant << " fibers=" << e.fibers << " sampling F_p^" << e.sampling_field_degree;
    return {e.eliminant == e.fibers && e.eliminant > 0, w.str()};
  });
}

void embedding_check(Runner& R, const std::string& anchor, int expected, std::optional<EmbeddingResult>& emb,
                     const std::optional<FFElem>& f, const std::optional<FFElem>& g, uint64_t seed) {
  R.check("image degree", anchor, [&]() -> Outcome {
    emb = build_embedding(need(f, "f"), need(g, "g"), expected, seed);
    std::ostringstream w;
    w << "deg=" << emb->image_degree << " relations=" << emb->relation_count << " birational=" << emb->birational
      << " injective_samples=" << emb->injective_samples << " sample_points=" << emb->sample_points_ok;
    return {emb->image_degree == expected && emb->relation_count == 1 && emb->birational && emb->injective_samples &&
                emb->sample_points_ok,
            w.str()};
  });
}

void certify_check(Runner& R, const std::string& name, const std::string& anchor, PointKind want,
                   const std::function<ProjPoint()>& center, const std::optional<FFElem>& t,
                   const std::optional<AutGroup>& G, const std::optional<EmbeddingResult>& emb,
                   const Place* inner, uint64_t seed, std::optional<ProjPoint>& out) {
  R.check(name, anchor, [&]() -> Outcome {
    const auto& e = need(emb, "embedding");
    ProjPoint c = center();
    auto cert = galois_certify(c, need(t, "fixed-field generator"), need(G, "group"), e.f, e.g, *e.image, inner, seed);
    out = c;
    const Field& k = *e.image->field;
    std::ostringstream w;
    w << "center=" << pt(k, c) << " kind=" << point_kind_name(cert.kind) << " |G|=" << cert.group_order
      << " pencil=" << cert.pencil_ok << " distinct=" << cert.distinct << " fixes_t=" << cert.fixes_t
      << " [K(C):K(t)]=" << cert.ext_degree << " d-mult=" << cert.projection_degree;
    if (inner) w << " e=" << cert.ramification;
    return {cert.ok() && cert.kind == want, w.str()};
  });
}

void distinct_check(Runner& R, const std::string& anchor, const std::optional<ProjPoint>& a,
                    const std::optional<ProjPoint>& b) {
  R.check("two distinct Galois points", anchor, [&]() -> Outcome {
    return {need(a, "first point") != need(b, "second point"), "both certified"};
  });
}

// Picks the conjugation side under which every element fixes t.
AutGroup conjugate_fixing(const AutGroup& G1, const RatMap& h, const FFElem& t, std::string& side) {
  for (ConjSide s : {ConjSide::HGHinv, ConjSide::HinvGH}) {
    AutGroup G2 = conjugate(G1, h, s, "G2");
    if (std::all_of(G2.elems.begin(), G2.elems.end(), [&](const RatMap& m) { return pullback(m, t) == t; })) {
      side = s == ConjSide::HGHinv ? "h G1 h^-1" : "h^-1 G1 h";
      return G2;
    }
  }
  throw MathError("no conjugate of G1 fixes the second generator");
}

void suite_thm1a(Runner& R, const RunConfig& cfg) {
  const FamilyParams fp{cfg.p, cfg.n, *cfg.m, Mode::Fm};
  const uint64_t q = fp.q(), m = fp.e, s = fp.s();
  std::optional<FamilyConstants> pc;
  std::optional<FFElem> f, g;
  CurvePtr C;
  R.check("thm1a: constants", "lambda^q + lambda = 0", [&]() -> Outcome {
    pc = make_constants(fp, cfg.ext_cap);
    C = make_curve(Family::Fm, fp, pc->field);
    f = FFElem::y(C).inverse();
    g = FFElem::x(C).pow(int64_t(s)) / FFElem::y(C);
    return {pc->lambda_set.size() == q, "field " + pc->field->name() + " |lambda|=" + str(pc->lambda_set.size())};
  });

  std::optional<RatMap> alpha;
  R.check("thm1a: alpha identity", "(1/x)^q + 1/x = y^m / x^(sm), alpha o alpha = id", [&]() -> Outcome {
    need(pc, "constants");
    FFElem x = FFElem::x(C), y = FFElem::y(C), xi = x.inverse();
    bool ident = xi.pow(int64_t(q)) + xi == y.pow(int64_t(m)) / x.pow(int64_t(s * m));
    alpha = make_alpha(C);
    bool inv = same_map(compose(*alpha, *alpha), identity_map(C));
    return {ident && maps_into(*alpha) && inv, "identity=" + str(ident) + " involution=" + str(inv)};
  });

  std::optional<AutGroup> G1, G2;
  R.check("thm1a: G1", "|G1| = q", [&]() -> Outcome {
    G1 = make_G1(Theorem::T1a, need(pc, "constants"), C);
    return {G1->order() == q && G1->latin_square(), "|G1|=" + str(G1->order())};
  });
  R.check("thm1a: G2", "G2 = alpha G1 alpha, |G2| = q", [&]() -> Outcome {
    G2 = conjugate(need(G1, "G1"), need(alpha, "alpha"), ConjSide::HinvGH, "G2");
    return {G2->order() == q && G2->latin_square(), "|G2|=" + str(G2->order())};
  });
  R.check("thm1a: trivial intersection", "G1 & G2 = {id}", [&]() -> Outcome {
    size_t k = group_intersection(need(G1, "G1"), need(G2, "G2")).order();
    return {k == 1, "|G1 & G2|=" + str(k)};
  });

  std::optional<Place> Pinf, P0;
  R.check("thm1a: orbits of W", "{P_inf} + G1(P_0) = W = {P_0} + G2(P_inf)", [&]() -> Outcome {
    const Field& k = *need(pc, "constants").field;
    Pinf.emplace(C, ProjPoint::make(k, k.zero(), k.one(), k.zero()), "P_inf", cfg.precision);
    P0.emplace(C, ProjPoint::affine(k, k.zero(), k.zero()), "P_0", cfg.precision);
    std::vector<ProjPoint> W{Pinf->center()};
    for (Elem l : pc->lambda_set) W.push_back(ProjPoint::affine(k, l, k.zero()));
    auto left = orbit(need(G1, "G1"), *P0);
    left.push_back(Pinf->center());
    auto right = orbit(need(G2, "G2"), *Pinf);
    right.push_back(P0->center());
    return {sorted(left) == sorted(W) && sorted(right) == sorted(W), "|W|=" + str(W.size())};
  });

  std::optional<ExtensionDegreeReport> e1, e2;
  R.check("thm1a: fixed field of G1", "K(C)^G1 = K(1/y)", [&]() -> Outcome {
    auto rep = verify_fixed_field(need(G1, "G1"), need(f, "1/y"), cfg.seed);
    e1 = rep.ext;
    return {rep.ok, "fixed=" + str(rep.all_fixed) + " degree=" + str(rep.degree)};
  });
  ext_check(R, "1/y on Fm", e1);
  R.check("thm1a: fixed field of G2", "K(C)^G2 = K(x^s/y)", [&]() -> Outcome {
    auto rep = verify_fixed_field(need(G2, "G2"), need(g, "x^s/y"), cfg.seed);
    e2 = rep.ext;
    return {rep.ok, "fixed=" + str(rep.all_fixed) + " degree=" + str(rep.degree)};
  });
  ext_check(R, "x^s/y on Fm", e2);

  std::optional<EmbeddingResult> emb;
  embedding_check(R, "deg phi(C) = q+1 for phi = (1/y : x^s/y : 1)", int(q + 1), emb, f, g, cfg.seed);

  std::optional<ProjPoint> c1, c2;
  certify_check(R, "thm1a: inner Galois point phi(P_inf)", "phi(P_inf) = (0:1:0) inner, G = G1", PointKind::InnerSmooth,
                [&] {
                  ProjPoint c = image_of(need(emb, "embedding").map, need(Pinf, "P_inf"));
                  const Field& k = *pc->field;
                  if (c != ProjPoint::make(k, k.zero(), k.one(), k.zero())) throw MathError("phi(P_inf) = " + pt(k, c));
                  return c;
                },
                f, G1, emb, Pinf ? &*Pinf : nullptr, cfg.seed, c1);
  certify_check(R, "thm1a: inner Galois point phi(P_0)", "phi(P_0) = (1:0:0) inner, G = G2", PointKind::InnerSmooth,
                [&] {
                  ProjPoint c = image_of(need(emb, "embedding").map, need(P0, "P_0"));
                  const Field& k = *pc->field;
                  if (c != ProjPoint::make(k, k.one(), k.zero(), k.zero())) throw MathError("phi(P_0) = " + pt(k, c));
                  return c;
                },
                g, G2, emb, P0 ? &*P0 : nullptr, cfg.seed, c2);
  distinct_check(R, "phi(P_inf) != phi(P_0)", c1, c2);
}

void suite_lemma1(Runner& R, const RunConfig& cfg) {
  const FamilyParams fp{cfg.p, cfg.n, *cfg.m, Mode::Fm};
  std::optional<FmEmChain> L;
  R.check("lemma1: stage maps", "Fm -> Fbar -> mid -> Em, each stage lands on its target", [&]() -> Outcome {
    auto pc = make_constants(fp, cfg.ext_cap);
    L = fm_em_chain(pc, pc.field);
    return {L->stage_maps_ok, "target " + L->em->affine.to_string()};
  });
  R.check("lemma1: mid-chain identity", "(x^q+x+1)/x^(q+1) = (y/x^s)^m", [&]() -> Outcome {
    return {need(L, "chain").mid_identity, ""};
  });
  R.check("lemma1: composite", "Fm -> Em closed form", [&]() -> Outcome {
    return {need(L, "chain").composite_formula, ""};
  });
  R.check("lemma1: inverse witness", "Em -> Fm inverse, both compositions = id", [&]() -> Outcome {
    return {need(L, "chain").inverse_ok, ""};
  });
}

void suite_thm1b(Runner& R, const RunConfig& cfg) {
  const FamilyParams fp{cfg.p, cfg.n, *cfg.m, Mode::Fm};
  const uint64_t q = fp.q();
  std::optional<FamilyConstants> pc;
  CurvePtr C;
  R.check("thm1b: constants", "zeta^(q+1) = 1, omega^m = -1", [&]() -> Outcome {
    pc = make_constants(fp, cfg.ext_cap);
    C = make_curve(Family::Em, fp, pc->field);
    return {pc->zeta_set.size() == q + 1 && !pc->omega_set.empty(),
            "field " + pc->field->name() + " |zeta|=" + str(pc->zeta_set.size())};
  });

  std::optional<RatMap> beta;
  R.check("thm1b: beta numerator", "numerator of beta^* (x^(q+1) - 1 - y^m) = 0", [&]() -> Outcome {
    const auto& c = need(pc, "constants");
    bool a = beta_numerator(c.field, q, c.beta_lambda).is_zero();
    bool b = beta_numerator_expanded(c.field, q, c.beta_lambda).is_zero();
    return {a && b, "lambda=[" + str(c.beta_lambda.v) + "]"};
  });
  R.check("thm1b: beta inverse", "beta^-1 o beta = id = beta o beta^-1", [&]() -> Outcome {
    beta = make_beta(C, need(pc, "constants").beta_lambda);
    return {maps_into(*beta) && inverse_verified(*beta), ""};
  });

  std::optional<AutGroup> G1, G2;
  std::optional<Place> P1;
  std::vector<ProjPoint> X;
  R.check("thm1b: G1 transitive on X", "G1(1:0:1) = X, |X| = q+1", [&]() -> Outcome {
    const auto& c = need(pc, "constants");
    const Field& k = *c.field;
    G1 = make_G1(Theorem::T1b, c, C);
    for (Elem z : c.zeta_set) X.push_back(ProjPoint::affine(k, z, k.zero()));
    P1.emplace(C, ProjPoint::affine(k, k.one(), k.zero()), "(1:0:1)", cfg.precision);
    return {G1->latin_square() && G1->order() == q + 1 && X.size() == q + 1 && sorted(orbit(*G1, *P1)) == sorted(X),
            "|G1|=" + str(G1->order()) + " |X|=" + str(X.size())};
  });

  std::optional<FFElem> f, g;
  // poles of 1/y are exactly X, which the embedding needs
  R.check("thm1b: G2", "G2 = beta G1 beta^-1 fixes (beta^-1)^* (1/y)", [&]() -> Outcome {
    f = FFElem::y(C).inverse();
    const RatMap& b = need(beta, "beta");
    g = pullback(*b.inverse, FFElem::y(b.dst).inverse());
    std::string side;
    G2 = conjugate_fixing(need(G1, "G1"), b, *g, side);
    return {G2->order() == q + 1 && G2->latin_square(), "|G2|=" + str(G2->order()) + " as " + side};
  });
  R.check("thm1b: trivial intersection", "G1 & G2 = {id}, separated at (0:omega:1)", [&]() -> Outcome {
    const auto& c = need(pc, "constants");
    const Field& k = *c.field;
    Place W(C, ProjPoint::affine(k, k.zero(), c.omega_set.front()), "(0:omega:1)", cfg.precision);
    ProjPoint bw = image_of(need(beta, "beta"), W);
    Place BW(C, bw, "beta(0:omega:1)", cfg.precision);
    bool fixed2 = std::all_of(need(G2, "G2").elems.cbegin(), G2->elems.cend(),
                              [&](const RatMap& t) { return image_of(t, BW) == bw; });
    bool moved1 = true;
    for (size_t i = 1; i < need(G1, "G1").order(); ++i) moved1 = moved1 && image_of(G1->elems[i], BW) != bw;
    size_t meet = group_intersection(*G1, *G2).order();
    return {fixed2 && moved1 && meet == 1,
            "beta(0:omega:1)=" + pt(k, bw) + " fixed by G2=" + str(fixed2) + " moved by G1-id=" + str(moved1)};
  });
  R.check("thm1b: orbits of (1:0:1)", "G1(1:0:1) = X = G2(1:0:1)", [&]() -> Outcome {
    auto a = sorted(orbit(need(G1, "G1"), need(P1, "(1:0:1)")));
    auto b = sorted(orbit(need(G2, "G2"), *P1));
    return {a == sorted(X) && b == sorted(X), "|X|=" + str(X.size())};
  });

  std::optional<ExtensionDegreeReport> e1, e2;
  R.check("thm1b: fixed field of G1", "K(C)^G1 = K(1/y)", [&]() -> Outcome {
    auto rep = verify_fixed_field(need(G1, "G1"), need(f, "1/y"), cfg.seed);
    e1 = rep.ext;
    return {rep.ok, "degree=" + str(rep.degree)};
  });
  ext_check(R, "1/y on Em", e1);
  R.check("thm1b: fixed field of G2", "K(C)^G2 = K((beta^-1)^* (1/y))", [&]() -> Outcome {
    auto rep = verify_fixed_field(need(G2, "G2"), need(g, "(beta^-1)^* (1/y)"), cfg.seed);
    e2 = rep.ext;
    return {rep.ok, "degree=" + str(rep.degree)};
  });
  ext_check(R, "(beta^-1)^* (1/y) on Em", e2);

  std::optional<EmbeddingResult> emb;
  embedding_check(R, "deg psi(C) = q+1 for psi = (1/y : (beta^-1)^* (1/y) : 1)", int(q + 1), emb, f, g, cfg.seed);
  std::optional<ProjPoint> c1, c2;
  auto fixed_center = [&](int which) {
    return [&, which] {
      const Field& k = *need(pc, "constants").field;
      return which == 1 ? ProjPoint::make(k, k.zero(), k.one(), k.zero()) : ProjPoint::make(k, k.one(), k.zero(), k.zero());
    };
  };
  certify_check(R, "thm1b: outer Galois point (0:1:0)", "(0:1:0) outer, G = G1", PointKind::Outer, fixed_center(1), f,
                G1, emb, nullptr, cfg.seed, c1);
  certify_check(R, "thm1b: outer Galois point (1:0:0)", "(1:0:0) outer, G = G2", PointKind::Outer, fixed_center(0), g,
                G2, emb, nullptr, cfg.seed, c2);
  distinct_check(R, "(0:1:0) != (1:0:0)", c1, c2);
}

void suite_thm2(Runner& R, const RunConfig& cfg) {
  const FamilyParams fp{cfg.p, cfg.n, *cfg.r, Mode::Gr};
  const uint64_t q = fp.q(), r = fp.e, qr1 = ipow(q, unsigned(r)) + 1;
  std::optional<FamilyConstants> pc;
  CurvePtr C;
  R.check("thm2: constants", "b = (-1)^(r-1) b^(q^(2r)) != 0, c^q + c = b^(q^r+1), c' = -c + g_b(b)",
          [&]() -> Outcome {
            pc = make_constants(fp, cfg.ext_cap);
            C = make_curve(Family::Gr, fp, pc->field);
            const Field& k = *pc->field;
            // independent re-check with plain powers
            Elem sign = r % 2 == 1 ? k.one() : k.neg(k.one());
            Elem b = pc->b, c = pc->c;
            bool ok = b.v != 0 && c.v != 0 && b == k.mul(sign, k.pow(b, ipow(q, unsigned(2 * r)))) &&
                      k.add(k.pow(c, q), c) == k.pow(b, qr1) &&
                      pc->c_prime == k.sub(gb_eval(k, fp.n, unsigned(r), b, b), c);
            return {ok, "field " + k.name() + " b=[" + str(b.v) + "] c=[" + str(c.v) + "] c'=[" + str(pc->c_prime.v) + "]"};
          });
  R.check("thm2: g_b properties", "g_b properties (1)-(4) as polynomial identities", [&]() -> Outcome {
    const auto& c = need(pc, "constants");
    auto props = check_gb_properties(c.field, fp.n, unsigned(r), c.b, cfg.seed);
    std::string w;
    for (bool b : props) w += b ? '1' : '0';
    return {std::all_of(props.begin(), props.end(), [](bool b) { return b; }), "properties=" + w};
  });
  std::optional<RatMap> gamma;
  R.check("thm2: gamma", "gamma(x,y) = (g_b(y) + c + x, y + b), gamma^-1 verified", [&]() -> Outcome {
    gamma = make_gamma(C, need(pc, "constants"));
    return {maps_into(*gamma) && inverse_verified(*gamma), ""};
  });

  std::optional<AutGroup> G1, G2;
  std::optional<FFElem> f, g;
  R.check("thm2: G1", "|G1| = q^r+1", [&]() -> Outcome {
    G1 = make_G1(Theorem::T2, need(pc, "constants"), C);
    f = FFElem::x(C);
    return {G1->order() == qr1 && G1->latin_square(), "|G1|=" + str(G1->order())};
  });
  R.check("thm2: G2", "G2 = gamma G1 gamma^-1 fixes (gamma^-1)^* x", [&]() -> Outcome {
    const RatMap& gm = need(gamma, "gamma");
    g = pullback(*gm.inverse, FFElem::x(gm.dst));
    std::string side;
    G2 = conjugate_fixing(need(G1, "G1"), gm, *g, side);
    return {G2->order() == qr1 && G2->latin_square(), "|G2|=" + str(G2->order()) + " as " + side};
  });
  R.check("thm2: trivial intersection", "G1 & G2 = {id}, sigma(gamma(R)) = (c+alpha : zeta b : 1) != gamma(R)",
          [&]() -> Outcome {
            const auto& c = need(pc, "constants");
            const Field& k = *c.field;
            Elem a = c.alpha_set.front();
            Place Rp(C, ProjPoint::affine(k, a, k.zero()), "R", cfg.precision);
            ProjPoint gr = image_of(need(gamma, "gamma"), Rp);
            bool formula = gr == ProjPoint::affine(k, k.add(c.c, a), c.b);
            Place GR(C, gr, "gamma(R)", cfg.precision);
            bool fixed2 = std::all_of(need(G2, "G2").elems.cbegin(), G2->elems.cend(),
                                      [&](const RatMap& t) { return image_of(t, GR) == gr; });
            bool moved1 = true;
            for (size_t i = 1; i < need(G1, "G1").order(); ++i) {
              ProjPoint im = image_of(G1->elems[i], GR);
              // expect (c + alpha : zeta b : 1) with zeta != 1
              bool shape = im.c[2].v != 0 && k.div(im.c[0], im.c[2]) == k.add(c.c, a) &&
                           k.pow(k.div(im.c[1], im.c[2]), qr1) == k.pow(c.b, qr1);
              moved1 = moved1 && im != gr && shape;
            }
            size_t meet = group_intersection(*G1, *G2).order();
            return {formula && fixed2 && moved1 && meet == 1,
                    "gamma(R)=" + pt(k, gr) + " fixed by G2=" + str(fixed2) + " moved by G1-id=" + str(moved1)};
          });
  R.check("thm2: divisor condition", "sum sigma(Q_inf) = (q^r+1) Q_inf = sum tau(Q_inf)", [&]() -> Outcome {
    const Field& k = *need(pc, "constants").field;
    Place Q(C, ProjPoint::make(k, k.one(), k.zero(), k.zero()), "Q_inf", cfg.precision);
    size_t n1 = 0, n2 = 0;
    for (auto& p : orbit(need(G1, "G1"), Q)) n1 += p == Q.center();
    for (auto& p : orbit(need(G2, "G2"), Q)) n2 += p == Q.center();
    return {n1 == qr1 && n2 == qr1, str(n1) + " Q_inf = " + str(n2) + " Q_inf"};
  });

  std::optional<ExtensionDegreeReport> e1, e2;
  R.check("thm2: fixed field of G1", "K(C)^G1 = K(x)", [&]() -> Outcome {
    auto rep = verify_fixed_field(need(G1, "G1"), need(f, "x"), cfg.seed);
    e1 = rep.ext;
    return {rep.ok, "degree=" + str(rep.degree)};
  });
  ext_check(R, "x on Gr", e1);
  R.check("thm2: fixed field of G2", "K(C)^G2 = K((gamma^-1)^* x)", [&]() -> Outcome {
    auto rep = verify_fixed_field(need(G2, "G2"), need(g, "(gamma^-1)^* x"), cfg.seed);
    e2 = rep.ext;
    return {rep.ok, "degree=" + str(rep.degree)};
  });
  ext_check(R, "(gamma^-1)^* x on Gr", e2);

  std::optional<EmbeddingResult> emb;
  embedding_check(R, "deg xi(C) = q^r+1 for xi = (x : (gamma^-1)^* x : 1)", int(qr1), emb, f, g, cfg.seed);
  std::optional<ProjPoint> c1, c2;
  certify_check(R, "thm2: outer Galois point (0:1:0)", "(0:1:0) outer, G = G1", PointKind::Outer,
                [&] { const Field& k = *need(pc, "constants").field; return ProjPoint::make(k, k.zero(), k.one(), k.zero()); },
                f, G1, emb, nullptr, cfg.seed, c1);
  certify_check(R, "thm2: outer Galois point (1:0:0)", "(1:0:0) outer, G = G2", PointKind::Outer,
                [&] { const Field& k = *need(pc, "constants").field; return ProjPoint::make(k, k.one(), k.zero(), k.zero()); },
                g, G2, emb, nullptr, cfg.seed, c2);
  distinct_check(R, "(0:1:0) != (1:0:0)", c1, c2);
}

void suite_prop1(Runner& R, const RunConfig& cfg) {
  const FamilyParams fp{cfg.p, cfg.n, *cfg.m, Mode::Fm};
  std::vector<ExclusionItem> items;
  bool built = false;
  R.check("prop1: image", "phi = (1/y : x^s/y : 1)", [&]() -> Outcome {
    items = proposition_exclusion_suite(make_constants(fp, cfg.ext_cap), cfg.seed, cfg.precision);
    built = true;
    return {true, str(items.size()) + " items"};
  });
  if (!built) return;
  for (const auto& it : items) {
    if (it.machine_checked)
      R.check("prop1: " + it.name, it.name, [&]() -> Outcome { return {it.ok, it.witness}; });
    else
      R.note("prop1: " + it.name, it.name, "external", it.witness);
  }
}

bool is_excluded_prop(const RunConfig& cfg) { return ipow(cfg.p, cfg.n) == 3 && cfg.m && *cfg.m == 2; }

bool needs_m(const std::string& s) { return s == "thm1a" || s == "thm1b" || s == "lemma1" || s == "prop1"; }

}  // namespace

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j;
  j["p"] = p;
  j["n"] = n;
  j["m"] = m ? nlohmann::json(*m) : nlohmann::json(nullptr);
  j["r"] = r ? nlohmann::json(*r) : nlohmann::json(nullptr);
  j["selector"] = selector;
  j["seed"] = seed;
  j["ext_cap"] = ext_cap;
  j["precision"] = precision;
  j["timing"] = timing;
  return j;
}

void validate(const RunConfig& cfg) {
  if (std::find(kSelectors.begin(), kSelectors.end(), cfg.selector) == kSelectors.end())
    throw ConfigError("unknown selector '" + cfg.selector + "'");
  if (cfg.ext_cap < 1) throw ConfigError("ext-cap must be positive");
  if (cfg.precision < 0) throw ConfigError("precision must be non-negative");
  if (needs_m(cfg.selector) && !cfg.m) throw ConfigError(cfg.selector + " needs m");
  if (cfg.selector == "thm2" && !cfg.r) throw ConfigError("thm2 needs r");
  if (cfg.selector == "all" && !cfg.m && !cfg.r) throw ConfigError("all needs m or r");
  if (cfg.m && cfg.selector != "thm2") validate(FamilyParams{cfg.p, cfg.n, *cfg.m, Mode::Fm});
  if (cfg.r && (cfg.selector == "thm2" || cfg.selector == "all")) validate(FamilyParams{cfg.p, cfg.n, *cfg.r, Mode::Gr});
  if (cfg.selector == "prop1" && is_excluded_prop(cfg)) throw ConfigError("(q, m) = (3, 2) is excluded for prop1");
}

Report run(const RunConfig& cfg) {
  Report rep;
  rep.config = cfg.to_json();
  try {
    validate(cfg);
  } catch (const std::exception& e) {
    rep.verdict = "rejected";
    rep.error = e.what();
    return rep;
  }
  Runner R(rep, cfg.timing);
  const std::string& s = cfg.selector;
  bool all = s == "all";
  if (cfg.m) {
    if (all || s == "thm1a") suite_thm1a(R, cfg);
    if (all || s == "lemma1") suite_lemma1(R, cfg);
    if (all || s == "thm1b") suite_thm1b(R, cfg);
    if (all && is_excluded_prop(cfg))
      R.note("prop1", "excluded parameters", "skipped", "(q, m) = (3, 2)");
    else if (all || s == "prop1")
      suite_prop1(R, cfg);
  }
  if (cfg.r && (all || s == "thm2")) suite_thm2(R, cfg);
  bool failed = std::any_of(rep.checks.begin(), rep.checks.end(), [](const CheckRecord& c) { return c.failed(); });
  rep.verdict = failed ? "fail" : "pass";
  return rep;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["config"] = config;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks)
    j["checks"].push_back(
        {{"name", c.name}, {"anchor", c.anchor}, {"status", c.status}, {"witness", c.witness}, {"millis", c.millis}});
  j["verdict"] = verdict;
  if (!error.empty()) j["error"] = error;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream o;
  o << "config: " << config.dump() << "\n";
  if (verdict == "rejected") {
    o << "rejected: " << error << "\n";
    return o.str();
  }
  size_t w = 0;
  for (const auto& c : checks) w = std::max(w, c.name.size());
  for (const auto& c : checks) {
    o << (c.status == "pass" ? "  PASS    " : c.status == "external" ? "  EXT     " : c.status == "skipped" ? "  SKIP    " : "  FAIL    ")
      << c.name << std::string(w - c.name.size() + 2, ' ') << c.witness;
    if (c.failed()) o << " (" << c.status << ")";
    if (c.millis) o << " [" << c.millis << " ms]";
    o << "\n";
  }
  o << "verdict: " << verdict << "\n";
  return o.str();
}

int Report::exit_code() const { return verdict == "rejected" ? 2 : verdict == "fail" ? 1 : 0; }

std::vector<GridEntry> parse_grid(std::istream& in) {
  std::vector<GridEntry> out;
  std::string line;
  for (int no = 1; std::getline(in, line); ++no) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string tok;
    std::vector<std::string> toks;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    GridEntry e;
    e.line = no;
    if (toks.size() != 4) {
      e.parse_error = "expected 'p n m|r selector'";
    } else {
      try {
        size_t used = 0;
        long long v[3];
        for (int i = 0; i < 3; ++i) {
          v[i] = std::stoll(toks[i], &used);
          if (used != toks[i].size() || v[i] < 0 || v[i] > 1'000'000) throw std::invalid_argument(toks[i]);
        }
        e.p = uint32_t(v[0]);
        e.n = unsigned(v[1]);
        e.e = unsigned(v[2]);
      } catch (const std::exception&) {
        e.parse_error = "bad number";
      }
      e.selector = toks[3];
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<GridEntry> default_grid() {
  return {{1, 3, 1, 2, "thm1a", ""}, {2, 3, 1, 2, "lemma1", ""}, {3, 3, 1, 2, "thm1b", ""},
          {4, 5, 1, 2, "prop1", ""}, {5, 2, 1, 2, "thm2", ""}};
}

SweepReport sweep(const std::vector<GridEntry>& grid, const RunConfig& base) {
  SweepReport sr;
  sr.entries = grid;
  for (const auto& e : grid) {
    RunConfig cfg = base;
    cfg.p = e.p;
    cfg.n = e.n;
    cfg.selector = e.selector;
    cfg.m.reset();
    cfg.r.reset();
    if (e.selector == "thm2")
      cfg.r = e.e;
    else
      cfg.m = e.e;
    if (!e.parse_error.empty()) {
      Report rep;
      rep.config = cfg.to_json();
      rep.verdict = "rejected";
      rep.error = "line " + std::to_string(e.line) + ": " + e.parse_error;
      sr.reports.push_back(std::move(rep));
      continue;
    }
    sr.reports.push_back(run(cfg));
  }
  return sr;
}

nlohmann::json SweepReport::to_json() const {
  nlohmann::json j;
  j["reports"] = nlohmann::json::array();
  j["matrix"] = nlohmann::json::array();
  for (size_t i = 0; i < reports.size(); ++i) {
    j["reports"].push_back(reports[i].to_json());
    j["matrix"].push_back({{"line", entries[i].line},
                           {"p", entries[i].p},
                           {"n", entries[i].n},
                           {"e", entries[i].e},
                           {"selector", entries[i].selector},
                           {"verdict", reports[i].verdict}});
  }
  j["verdict"] = exit_code() == 0 ? "pass" : exit_code() == 1 ? "fail" : "rejected";
  return j;
}

std::string SweepReport::to_text() const {
  std::ostringstream o;
  o << "line  p   n   m|r  selector  verdict\n";
  for (size_t i = 0; i < reports.size(); ++i) {
    const auto& e = entries[i];
    o << e.line << "\t" << e.p << "\t" << e.n << "\t" << e.e << "\t" << e.selector << "\t" << reports[i].verdict;
    if (!reports[i].error.empty()) o << " (" << reports[i].error << ")";
    o << "\n";
  }
  return o.str();
}

int SweepReport::exit_code() const {
  bool rejected = false;
  for (const auto& r : reports) {
    if (r.verdict == "fail") return 1;
    rejected = rejected || r.verdict == "rejected";
  }
  return rejected ? 2 : 0;
}

}  // namespace galpts
