// [K(C):K(t)] by elimination and by counting points in generic fibers.
#include <algorithm>

#include "galpts/function_field.hpp"

namespace galpts {

namespace {

// P(z - kappa y, y); z takes the place of x.
BiPoly shear(const BiPoly& p, Elem kappa) {
  const FieldPtr& f = p.field();
  return p.substitute(BiPoly::x(f) - BiPoly::y(f).scaled(kappa), BiPoly::y(f));
}

// Res_y(F, G) as a polynomial in z, also when G has no y.
UniPoly res_y(const BiPoly& F, const BiPoly& G) {
  if (G.deg_y() <= 0) return G.coeff_y(0).pow(F.deg_y());
  return resultant(F, G, Var::Y);
}

// The shear keeps F monic in y exactly when the top form does not vanish at (-kappa, 1).
bool good_shear(const BiPoly& Fk, int d) {
  return Fk.deg_y() == d && Fk.coeff_y(d).degree() == 0;
}

Elem random_nonzero(const Field& f, std::mt19937_64& rng) {
  Elem e;
  do e = f.random(rng);
  while (e.v == 0);
  return e;
}

struct Sheared {
  BiPoly F, A, B;
};

Sheared sheared(const BiPoly& F, const BiPoly& A, const BiPoly& B, const Field& f, std::mt19937_64& rng) {
  const int d = F.total_degree();
  for (int tries = 0; tries < 64; ++tries) {
    Elem k = random_nonzero(f, rng);
    BiPoly Fk = shear(F, k);
    // monic in y, so resultants at specialisations where deg_y(A - T B) drops stay consistent
    if (good_shear(Fk, d)) return {Fk.scaled(f.inv(Fk.coeff(0, d))), shear(A, k), shear(B, k)};
  }
  throw MathError("no admissible shear found");
}

}  // namespace

FieldPtr sampling_field(const PlaneCurve& c) {
  const FieldPtr& base = c.field;
  uint64_t need = 100ull * c.degree * c.degree;
  unsigned k0 = base->degree();
  for (unsigned k = k0;; k += k0) {
    long double size = 1;
    for (unsigned i = 0; i < k; ++i) size *= base->characteristic();
    if (size > static_cast<long double>(kDefaultFieldCap)) throw MathError("sampling field exceeds the size cap");
    if (size >= need) return build_field(base->characteristic(), k);
  }
}

int extension_degree_eliminant(const FFElem& t, std::mt19937_64& rng) {
  if (t.is_constant()) throw MathError("extension degree of a constant");
  const PlaneCurve& C = *t.curve();
  const FieldPtr& K = C.field;
  FieldPtr L = sampling_field(C);
  FieldHom h = embed(K, L);
  const BiPoly A = t.numerator(), B = t.denominator();

  for (int attempt = 0; attempt < 8; ++attempt) {
    Sheared s = sheared(C.affine, A, B, *K, rng);
    const int D = s.F.deg_y();
    if (K->order() <= static_cast<uint64_t>(D)) throw MathError("field too small to interpolate the eliminant");
    // R(z, T) by interpolation in T; s_i(T) is the coefficient of z^i
    std::vector<Elem> ts;
    std::vector<UniPoly> vals;
    for (int j = 0; j <= D; ++j) {
      Elem T{static_cast<uint32_t>(j)};
      ts.push_back(T);
      vals.push_back(res_y(s.F, s.A - s.B.scaled(T)));
    }
    int zdeg = 0;
    for (auto& v : vals) zdeg = std::max(zdeg, v.degree());
    std::vector<UniPoly> sz(zdeg + 1);
    for (int i = 0; i <= zdeg; ++i) {
      std::vector<Elem> ys;
      for (auto& v : vals) ys.push_back(v.coeff(i));
      sz[i] = interpolate(K, ts, ys);
    }
    // drop content depending on T only
    UniPoly cT(K);
    for (auto& u : sz) cT = gcd(cT, u);
    if (cT.is_zero()) throw MathError("eliminant vanishes identically");
    for (auto& u : sz) u = u.exact_div(cT);
    // drop content depending on z only: coefficients of T^k as z-polynomials
    int tdeg = 0;
    for (auto& u : sz) tdeg = std::max(tdeg, u.degree());
    UniPoly cz(K);
    std::vector<UniPoly> rk(tdeg + 1);
    for (int k = 0; k <= tdeg; ++k) {
      std::vector<Elem> c(zdeg + 1);
      for (int i = 0; i <= zdeg; ++i) c[i] = sz[i].coeff(k);
      rk[k] = UniPoly(K, c);
      cz = gcd(cz, rk[k]);
    }
    int deg = 0;
    for (auto& r : rk) deg = std::max(deg, r.degree());
    deg -= cz.degree();
    if (deg <= 0) throw MathError("eliminant lost its z-dependence");
    // separability at a generic T0 in L
    for (int probe = 0; probe < 5; ++probe) {
      Elem T0 = L->random(rng);
      std::vector<Elem> c(tdeg + 1);
      UniPoly at(L);
      for (int k = 0; k <= tdeg; ++k) {
        UniPoly rkL = (rk[k].exact_div(cz)).map(h);
        at += rkL * UniPoly::constant(L, L->pow(T0, k));
      }
      if (at.degree() != deg) continue;
      if (gcd(at, at.derivative()).degree() == 0) return deg;
    }
  }
  throw MathError("eliminant is never squarefree at generic values");
}

int extension_degree_fibers(const FFElem& t, std::mt19937_64& rng, std::vector<int>* samples, int n_samples) {
  if (t.is_constant()) throw MathError("extension degree of a constant");
  const PlaneCurve& C = *t.curve();
  FieldPtr L = sampling_field(C);
  FieldHom h = embed(C.field, L);
  const BiPoly F = C.affine.map(h), A = t.numerator().map(h), B = t.denominator().map(h);
  int best = 0;
  for (int k = 0; k < n_samples; ++k) {
    Sheared s = sheared(F, A, B, *L, rng);
    Elem t0 = L->random(rng);
    UniPoly hz = res_y(s.F, s.A - s.B.scaled(t0));
    int count = 0;
    if (hz.is_zero()) throw MathError("fiber equation vanishes identically");
    if (hz.degree() > 0) {
      UniPoly sh = squarefree_part(hz);
      count = sh.degree();
      if (s.B.total_degree() > 0) {
        UniPoly base = res_y(s.F, s.B);
        if (base.degree() > 0) count -= gcd(sh, squarefree_part(base)).degree();
      }
    }
    if (samples) samples->push_back(count);
    best = std::max(best, count);
  }
  return best;
}

int extension_degree(const FFElem& t, uint64_t seed, ExtensionDegreeReport* report) {
  std::mt19937_64 rng(seed);
  int a = extension_degree_eliminant(t, rng);
  std::vector<int> samples;
  int b = extension_degree_fibers(t, rng, &samples);
  if (report) {
    report->eliminant = a;
    report->fibers = b;
    report->samples = samples;
    report->sampling_field_degree = sampling_field(*t.curve())->degree();
  }
  if (a != b)
    throw MathError("extension degree methods disagree: eliminant " + std::to_string(a) + ", fibers " +
                    std::to_string(b));
  return a;
}

}  // namespace galpts
