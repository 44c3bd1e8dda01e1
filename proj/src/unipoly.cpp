#include "galpts/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace galpts {

UniPoly::UniPoly(FieldPtr f, std::vector<Elem> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(FieldPtr f, Elem c) { return UniPoly(std::move(f), {c}); }

UniPoly UniPoly::monomial(FieldPtr f, Elem c, size_t deg) {
  std::vector<Elem> v(deg + 1, Elem{});
  v[deg] = c;
  return UniPoly(std::move(f), std::move(v));
}

UniPoly UniPoly::from_ints(FieldPtr f, const std::vector<int64_t>& coeffs) {
  std::vector<Elem> v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) v.push_back(f->from_int(c));
  return UniPoly(std::move(f), std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().v == 0) c_.pop_back();
}

Elem UniPoly::eval(Elem a) const {
  Elem acc{};
  for (size_t i = c_.size(); i-- > 0;) acc = f_->add(f_->mul(acc, a), c_[i]);
  return acc;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(f_->inv(lc()));
}

UniPoly UniPoly::derivative() const {
  std::vector<Elem> d;
  for (size_t i = 1; i < c_.size(); ++i) d.push_back(f_->mul(f_->from_int(static_cast<int64_t>(i % f_->characteristic())), c_[i]));
  return UniPoly(f_, std::move(d));
}

UniPoly UniPoly::scaled(Elem s) const {
  std::vector<Elem> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = f_->mul(c_[i], s);
  return UniPoly(f_, std::move(v));
}

UniPoly UniPoly::shifted(size_t k) const {
  if (is_zero()) return *this;
  std::vector<Elem> v(k, Elem{});
  v.insert(v.end(), c_.begin(), c_.end());
  return UniPoly(f_, std::move(v));
}

UniPoly UniPoly::pow(uint64_t e) const {
  UniPoly r = constant(f_, f_->one()), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

UniPoly UniPoly::compose(const UniPoly& g) const {
  UniPoly acc(g.field());
  for (size_t i = c_.size(); i-- > 0;) acc = acc * g + constant(g.field(), c_[i]);
  return acc;
}

UniPoly UniPoly::map(const FieldHom& h) const {
  std::vector<Elem> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = h(c_[i]);
  return UniPoly(h.dst(), std::move(v));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (!f_) f_ = o.f_;
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = f_->add(c_[i], o.c_[i]);
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (!f_) f_ = o.f_;
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = f_->sub(c_[i], o.c_[i]);
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  const FieldPtr& f = a.f_ ? a.f_ : b.f_;
  if (a.is_zero() || b.is_zero()) return UniPoly(f);
  std::vector<Elem> r(a.c_.size() + b.c_.size() - 1, Elem{});
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].v == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = f->add(r[i + j], f->mul(a.c_[i], b.c_[j]));
  }
  return UniPoly(f, std::move(r));
}

UniPoly UniPoly::operator-() const {
  std::vector<Elem> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = f_->neg(c_[i]);
  return UniPoly(f_, std::move(v));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw MathError("polynomial division by zero");
  const FieldPtr& f = d.f_;
  std::vector<Elem> r = c_;
  if (r.size() < d.c_.size()) return {UniPoly(f), *this};
  std::vector<Elem> q(r.size() - d.c_.size() + 1, Elem{});
  const Elem lc_inv = f->inv(d.lc());
  const size_t dd = d.c_.size() - 1;
  for (size_t i = r.size(); i-- > dd;) {
    if (r[i].v == 0) continue;
    const Elem c = f->mul(r[i], lc_inv);
    q[i - dd] = c;
    for (size_t j = 0; j <= dd; ++j) r[i - dd + j] = f->sub(r[i - dd + j], f->mul(c, d.c_[j]));
  }
  r.resize(dd);
  return {UniPoly(f, std::move(q)), UniPoly(f, std::move(r))};
}

UniPoly UniPoly::exact_div(const UniPoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw MathError("inexact polynomial division");
  return q;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i].v == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c_[i].v != 1) os << "[" << c_[i].v << "]";
    if (i >= 1) os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

UniPoly gcd(const UniPoly& a0, const UniPoly& b0) {
  UniPoly a = a0, b = b0;
  while (!b.is_zero()) {
    UniPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly powmod(const UniPoly& base, uint64_t e, const UniPoly& mod) {
  UniPoly r = UniPoly::constant(mod.field(), mod.field()->one()) % mod;
  UniPoly b = base % mod;
  while (e) {
    if (e & 1) r = (r * b) % mod;
    e >>= 1;
    if (e) b = (b * b) % mod;
  }
  return r;
}

UniPoly squarefree_part(const UniPoly& f0) {
  if (f0.is_zero()) throw MathError("squarefree_part of the zero polynomial");
  const UniPoly f = f0.monic();
  if (f.degree() <= 0) return f;
  const FieldPtr& fld = f.field();
  const uint32_t p = fld->characteristic();
  const UniPoly df = f.derivative();
  if (df.is_zero()) {
    // f = h(x^p) = (h~(x))^p where h~ has p-th roots of the coefficients.
    std::vector<Elem> root_coeffs;
    const uint64_t root_exp = fld->degree() > 1 ? ipow(p, fld->degree() - 1) : 1;
    for (size_t i = 0; i < f.coeffs().size(); i += p) root_coeffs.push_back(fld->pow(f.coeffs()[i], root_exp));
    return squarefree_part(UniPoly(fld, std::move(root_coeffs)));
  }
  const UniPoly g = gcd(f, df);
  const UniPoly w = f.exact_div(g);  // every factor with multiplicity prime to p
  UniPoly rest = g;
  for (;;) {
    const UniPoly y = gcd(rest, w);
    if (y.degree() <= 0) break;
    rest = rest.exact_div(y);
  }
  if (rest.degree() <= 0) return w.monic();
  return (w * squarefree_part(rest)).monic();
}

std::vector<Elem> find_roots_scan(const UniPoly& f) {
  if (f.is_zero()) throw MathError("find_roots of the zero polynomial");
  std::vector<Elem> out;
  const auto& fld = *f.field();
  for (uint64_t v = 0; v < fld.order(); ++v) {
    const Elem a{static_cast<uint32_t>(v)};
    if (f.eval(a).v == 0) out.push_back(a);
  }
  return out;
}

namespace {

void split_linear(const UniPoly& g, std::mt19937_64& rng, std::vector<Elem>& out) {
  // g is monic, squarefree, and a product of distinct linear factors.
  if (g.degree() <= 0) return;
  const auto& fld = g.field();
  if (g.degree() == 1) {
    out.push_back(fld->neg(g.coeff(0)));
    return;
  }
  const uint64_t q = fld->order();
  for (int attempt = 0; attempt < 512; ++attempt) {
    UniPoly h;
    if (fld->characteristic() == 2) {
      // absolute trace of delta * x, summed as (delta x)^(2^i) mod g
      UniPoly term = UniPoly(fld, {Elem{}, fld->random(rng)}) % g;
      h = term;
      for (unsigned i = 1; i < fld->degree(); ++i) {
        term = (term * term) % g;
        h += term;
      }
    } else {
      const UniPoly shift = UniPoly(fld, {fld->random(rng), fld->one()});
      h = powmod(shift, (q - 1) / 2, g) - UniPoly::constant(fld, fld->one());
    }
    const UniPoly d = gcd(g, h);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_linear(d, rng, out);
      split_linear(g.exact_div(d), rng, out);
      return;
    }
  }
  throw MathError("equal-degree splitting failed to make progress");
}

}  // namespace

std::vector<Elem> find_roots_split(const UniPoly& f, uint64_t seed) {
  if (f.is_zero()) throw MathError("find_roots of the zero polynomial");
  if (f.degree() <= 0) return {};
  const auto& fld = f.field();
  const UniPoly m = f.monic();
  // gcd with x^q - x isolates the product of distinct linear factors.
  const UniPoly xq = powmod(UniPoly::x(fld), fld->order(), m);
  const UniPoly g = gcd(m, xq - UniPoly::x(fld));
  std::vector<Elem> out;
  std::mt19937_64 rng(seed);
  split_linear(g, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> find_roots(const UniPoly& f) {
  if (f.is_zero()) throw MathError("find_roots of the zero polynomial");
  std::vector<Elem> roots =
      f.field()->order() <= kRootScanLimit ? find_roots_scan(f) : find_roots_split(f);
  for (Elem r : roots)
    if (f.eval(r).v != 0) throw MathError("root verification failed");
  return roots;
}

FieldHom embed(const FieldPtr& src, const FieldPtr& dst) {
  if (src->characteristic() != dst->characteristic() || dst->degree() % src->degree() != 0)
    throw MathError("cannot embed " + src->name() + " into " + dst->name());
  if (src == dst) return FieldHom(src, dst, src->generator());
  std::vector<Elem> mod;
  for (uint32_t c : src->modulus()) mod.push_back(dst->from_int(c));
  const auto roots = find_roots(UniPoly(dst, mod));
  if (roots.empty()) throw MathError("internal fault: modulus of " + src->name() + " has no root in " + dst->name());
  return FieldHom(src, dst, roots.front());
}

Elem determinant(const Field& f, std::vector<std::vector<Elem>> m) {
  const size_t n = m.size();
  Elem det = f.one();
  for (size_t c = 0; c < n; ++c) {
    size_t sel = c;
    while (sel < n && m[sel][c].v == 0) ++sel;
    if (sel == n) return f.zero();
    if (sel != c) {
      std::swap(m[sel], m[c]);
      det = f.neg(det);
    }
    det = f.mul(det, m[c][c]);
    const Elem iv = f.inv(m[c][c]);
    for (size_t r = c + 1; r < n; ++r) {
      if (m[r][c].v == 0) continue;
      const Elem factor = f.mul(m[r][c], iv);
      for (size_t j = c; j < n; ++j) m[r][j] = f.sub(m[r][j], f.mul(factor, m[c][j]));
    }
  }
  return det;
}

Elem resultant(const UniPoly& a, const UniPoly& b, int da, int db) {
  const auto& f = *(a.field() ? a.field() : b.field());
  if (da < 0 || db < 0) throw MathError("resultant needs nonnegative formal degrees");
  if (da == 0 && db == 0) return f.one();
  const size_t n = static_cast<size_t>(da + db);
  std::vector<std::vector<Elem>> m(n, std::vector<Elem>(n, Elem{}));
  for (int r = 0; r < db; ++r)
    for (int i = 0; i <= da; ++i) m[r][r + da - i] = a.coeff(i);
  for (int r = 0; r < da; ++r)
    for (int i = 0; i <= db; ++i) m[db + r][r + db - i] = b.coeff(i);
  return determinant(f, std::move(m));
}

std::vector<std::vector<Elem>> kernel(const Field& f, std::vector<std::vector<Elem>> m, size_t cols) {
  std::vector<int> pivot_of_col(cols, -1);
  size_t row = 0;
  for (size_t c = 0; c < cols && row < m.size(); ++c) {
    size_t sel = row;
    while (sel < m.size() && m[sel][c].v == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    const Elem iv = f.inv(m[row][c]);
    for (auto& v : m[row]) v = f.mul(v, iv);
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c].v == 0) continue;
      const Elem factor = m[r][c];
      for (size_t j = c; j < cols; ++j) m[r][j] = f.sub(m[r][j], f.mul(factor, m[row][j]));
    }
    pivot_of_col[c] = static_cast<int>(row);
    ++row;
  }
  std::vector<std::vector<Elem>> basis;
  for (size_t fc = 0; fc < cols; ++fc) {
    if (pivot_of_col[fc] >= 0) continue;
    std::vector<Elem> v(cols, Elem{});
    v[fc] = f.one();
    for (size_t c = 0; c < cols; ++c)
      if (pivot_of_col[c] >= 0) v[c] = f.neg(m[pivot_of_col[c]][fc]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace galpts
