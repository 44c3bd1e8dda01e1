#include "galpts/constants.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "galpts/unipoly.hpp"

namespace galpts {

namespace {

// a^(q^i) with q = p^n
Elem qpow(const Field& f, unsigned n, Elem a, uint64_t i) { return f.frobenius(a, uint64_t{n} * i); }

std::vector<Elem> roots_of_binomial(const FieldPtr& f, uint64_t deg, Elem c) {
  // T^deg - c
  std::vector<Elem> co(deg + 1);
  co[0] = f->neg(c);
  co[deg] = f->one();
  return find_roots(UniPoly(f, co));
}

void require(bool ok, const std::string& what) {
  if (!ok) throw MathError("constant check failed: " + what);
}

}  // namespace

void validate(const FamilyParams& fp) {
  if (!is_prime(fp.p)) throw ConfigError("p = " + std::to_string(fp.p) + " is not prime");
  if (fp.n == 0) throw ConfigError("n must be at least 1");
  if (fp.n * std::log2(double(fp.p)) > 31) throw ConfigError("q is too large");
  uint64_t q = fp.q();
  if (fp.mode == Mode::Fm) {
    uint64_t m = fp.e;
    if (m < 2 || m >= q) throw ConfigError("need 2 <= m < q, got m = " + std::to_string(m));
    if ((q + 1) % m != 0)
      throw ConfigError("m = " + std::to_string(m) + " does not divide q+1 = " + std::to_string(q + 1));
  } else {
    if (fp.e < 2) throw ConfigError("need r >= 2, got r = " + std::to_string(fp.e));
    if (fp.n * fp.e * std::log2(double(fp.p)) > 31) throw ConfigError("q^r is too large");
  }
}

unsigned subfield_degree(const Field& f, Elem a) {
  for (unsigned j = 1; j <= f.degree(); ++j)
    if (f.degree() % j == 0 && f.frobenius(a, j) == a) return j;
  return f.degree();
}

Elem gb_eval(const Field& f, unsigned n, unsigned r, Elem b, Elem y) {
  Elem acc = f.zero();
  for (unsigned i = 0; i < r; ++i) {
    Elem term = f.mul(qpow(f, n, b, i + r), qpow(f, n, y, i));
    acc = (i % 2) ? f.sub(acc, term) : f.add(acc, term);
  }
  return acc;
}

namespace {

void fill_fm(FamilyConstants& pc) {
  const FieldPtr& f = pc.field;
  const auto& fp = pc.params;
  uint64_t q = fp.q();
  auto as = artin_schreier_op(*f, fp.n);

  pc.lambda_set = solve_additive(as, f->zero(), *f);
  pc.zeta_set = roots_of_binomial(f, q + 1, f->one());
  auto a = solve_additive(as, f->one(), *f);
  pc.omega_set = roots_of_binomial(f, fp.e, f->neg(f->one()));
  require(pc.lambda_set.size() == q, "|lambda_set| = q");
  require(pc.zeta_set.size() == q + 1, "|zeta_set| = q+1");
  require(!a.empty(), "a^q + a = 1 solvable");
  require(pc.omega_set.size() == fp.e, "|omega_set| = m");
  pc.a_root = a.front();

  auto beta = std::find_if(pc.lambda_set.begin(), pc.lambda_set.end(),
                           [&](Elem l) { return l != f->zero() && l != f->one(); });
  require(beta != pc.lambda_set.end(), "lambda outside {0,1}");
  pc.beta_lambda = *beta;

  // direct substitution
  for (Elem l : pc.lambda_set) require(f->add(qpow(*f, fp.n, l, 1), l) == f->zero(), "lambda^q + lambda = 0");
  for (Elem z : pc.zeta_set) require(f->pow(z, q + 1) == f->one(), "zeta^(q+1) = 1");
  for (Elem w : pc.omega_set) require(f->add(f->pow(w, fp.e), f->one()) == f->zero(), "omega^m + 1 = 0");
  require(f->add(qpow(*f, fp.n, pc.a_root, 1), pc.a_root) == f->one(), "a^q + a = 1");

  auto& d = pc.degrees_used;
  auto upd = [&](const std::string& k, const std::vector<Elem>& v) {
    unsigned mx = 1;
    for (Elem e : v) mx = std::max(mx, subfield_degree(*f, e));
    d[k] = mx;
  };
  upd("lambda", pc.lambda_set);
  upd("zeta", pc.zeta_set);
  upd("omega", pc.omega_set);
  d["a"] = subfield_degree(*f, pc.a_root);
}

// Returns false when no admissible (b, c) exists in this field.
bool fill_gr(FamilyConstants& pc) {
  const FieldPtr& f = pc.field;
  const auto& fp = pc.params;
  unsigned n = fp.n, r = fp.e;
  uint64_t qr1 = ipow(fp.q(), r) + 1;

  // b^(q^(2r)) - (-1)^(r-1) b = 0 is additive in b
  Elem sign = (r % 2) ? f->one() : f->neg(f->one());
  std::vector<AdditiveTerm> bop{{n * 2 * r, f->one()}, {0, f->neg(sign)}};
  if (n * 2 * r >= f->degree()) bop[0].frobenius_power %= f->degree();
  auto bs = solve_additive(bop, f->zero(), *f);
  auto as = artin_schreier_op(*f, n);
  bool found = false;
  for (Elem b : bs) {
    if (b == f->zero()) continue;
    auto cs = solve_additive(as, f->pow(b, qr1), *f);
    auto c = std::find_if(cs.begin(), cs.end(), [&](Elem e) { return e != f->zero(); });
    if (c == cs.end()) continue;
    pc.b = b;
    pc.c = *c;
    found = true;
    break;
  }
  if (!found) return false;
  pc.c_prime = f->add(f->neg(pc.c), gb_eval(*f, n, r, pc.b, pc.b));
  pc.zeta_set = roots_of_binomial(f, qr1, f->one());
  pc.alpha_set = solve_additive(as, f->zero(), *f);
  pc.lambda_set = pc.alpha_set;

  require(pc.b != f->zero() && pc.c != f->zero(), "b, c nonzero");
  require(pc.b == f->mul(sign, qpow(*f, n, pc.b, 2 * r)), "b = (-1)^(r-1) b^(q^(2r))");
  require(f->add(qpow(*f, n, pc.c, 1), pc.c) == f->pow(pc.b, qr1), "c^q + c = b^(q^r+1)");
  require(pc.c_prime == f->add(f->neg(pc.c), gb_eval(*f, n, r, pc.b, pc.b)), "c' = -c + g_b(b)");
  require(pc.zeta_set.size() == qr1, "|zeta_set| = q^r+1");
  require(pc.alpha_set.size() == fp.q(), "|alpha_set| = q");

  auto& d = pc.degrees_used;
  d["b"] = subfield_degree(*f, pc.b);
  d["c"] = subfield_degree(*f, pc.c);
  d["c_prime"] = subfield_degree(*f, pc.c_prime);
  unsigned mx = 1;
  for (Elem z : pc.zeta_set) mx = std::max(mx, subfield_degree(*f, z));
  d["zeta"] = mx;
  return true;
}

}  // namespace

FamilyConstants make_constants(const FamilyParams& fp, unsigned ext_cap) {
  validate(fp);
  FamilyConstants pc;
  pc.params = fp;
  // Fm constants all live in F_{q^2}; Gr needs 2r | K
  unsigned step = fp.mode == Mode::Fm ? 2 : 2 * fp.e;
  for (unsigned K = step; K <= ext_cap; K += step) {
    double bits = double(fp.n) * K * std::log2(double(fp.p));
    if (bits > 32) break;
    pc.field = build_field(fp.p, fp.n * K);
    pc.ext_degree = K;
    pc.degrees_used.clear();
    if (fp.mode == Mode::Fm) {
      fill_fm(pc);
      return pc;
    }
    if (fill_gr(pc)) return pc;
  }
  std::ostringstream os;
  os << "no admissible constants in F_{q^K} with K <= " << ext_cap;
  throw ConfigError(os.str());
}

}  // namespace galpts
