#include "galpts/bipoly.hpp"

#include <algorithm>
#include <sstream>

namespace galpts {

BiPoly BiPoly::constant(FieldPtr f, Elem c) { return monomial(std::move(f), c, 0, 0); }

BiPoly BiPoly::monomial(FieldPtr f, Elem c, uint32_t i, uint32_t j) {
  BiPoly b(std::move(f));
  b.set(i, j, c);
  return b;
}

BiPoly BiPoly::from_uni(const UniPoly& u, Var v) {
  BiPoly b(u.field());
  for (size_t i = 0; i < u.coeffs().size(); ++i) {
    const auto e = static_cast<uint32_t>(i);
    if (v == Var::X)
      b.set(e, 0, u.coeffs()[i]);
    else
      b.set(0, e, u.coeffs()[i]);
  }
  return b;
}

BiPoly BiPoly::from_y_major(FieldPtr f, const std::vector<UniPoly>& coeffs) {
  BiPoly b(std::move(f));
  for (size_t j = 0; j < coeffs.size(); ++j)
    for (size_t i = 0; i < coeffs[j].coeffs().size(); ++i)
      b.set(static_cast<uint32_t>(i), static_cast<uint32_t>(j), coeffs[j].coeffs()[i]);
  return b;
}

Elem BiPoly::coeff(uint32_t i, uint32_t j) const {
  auto it = t_.find({i, j});
  return it == t_.end() ? Elem{} : it->second;
}

void BiPoly::set(uint32_t i, uint32_t j, Elem c) {
  if (c.v == 0)
    t_.erase({i, j});
  else
    t_[{i, j}] = c;
}

int BiPoly::deg_x() const {
  int d = -1;
  for (const auto& [e, c] : t_) d = std::max(d, static_cast<int>(e.first));
  return d;
}

int BiPoly::deg_y() const {
  int d = -1;
  for (const auto& [e, c] : t_) d = std::max(d, static_cast<int>(e.second));
  return d;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : t_) d = std::max(d, static_cast<int>(e.first + e.second));
  return d;
}

UniPoly BiPoly::coeff_y(uint32_t j) const {
  std::vector<Elem> v;
  for (const auto& [e, c] : t_) {
    if (e.second != j) continue;
    if (v.size() <= e.first) v.resize(e.first + 1);
    v[e.first] = c;
  }
  return UniPoly(f_, std::move(v));
}

UniPoly BiPoly::coeff_x(uint32_t i) const {
  std::vector<Elem> v;
  for (const auto& [e, c] : t_) {
    if (e.first != i) continue;
    if (v.size() <= e.second) v.resize(e.second + 1);
    v[e.second] = c;
  }
  return UniPoly(f_, std::move(v));
}

std::vector<UniPoly> BiPoly::to_y_major() const {
  const int dy = deg_y();
  std::vector<std::vector<Elem>> raw(dy < 0 ? 0 : dy + 1);
  for (const auto& [e, c] : t_) {
    auto& row = raw[e.second];
    if (row.size() <= e.first) row.resize(e.first + 1);
    row[e.first] = c;
  }
  std::vector<UniPoly> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.emplace_back(f_, std::move(r));
  return out;
}

Elem BiPoly::eval(Elem a, Elem b) const {
  Elem acc{};
  for (const auto& [e, c] : t_) acc = f_->add(acc, f_->mul(c, f_->mul(f_->pow(a, e.first), f_->pow(b, e.second))));
  return acc;
}

UniPoly BiPoly::at_x(Elem a) const {
  const int dy = deg_y();
  std::vector<Elem> v(dy < 0 ? 0 : dy + 1, Elem{});
  for (const auto& [e, c] : t_) v[e.second] = f_->add(v[e.second], f_->mul(c, f_->pow(a, e.first)));
  return UniPoly(f_, std::move(v));
}

UniPoly BiPoly::at_y(Elem b) const {
  const int dx = deg_x();
  std::vector<Elem> v(dx < 0 ? 0 : dx + 1, Elem{});
  for (const auto& [e, c] : t_) v[e.first] = f_->add(v[e.first], f_->mul(c, f_->pow(b, e.second)));
  return UniPoly(f_, std::move(v));
}

BiPoly BiPoly::partial(Var v) const {
  BiPoly out(f_);
  for (const auto& [e, c] : t_) {
    const uint32_t k = v == Var::X ? e.first : e.second;
    if (k == 0) continue;
    const Elem nc = f_->mul(c, f_->from_int(k % f_->characteristic()));
    if (v == Var::X)
      out.set(e.first - 1, e.second, f_->add(out.coeff(e.first - 1, e.second), nc));
    else
      out.set(e.first, e.second - 1, f_->add(out.coeff(e.first, e.second - 1), nc));
  }
  return out;
}

BiPoly BiPoly::swapped() const {
  BiPoly out(f_);
  for (const auto& [e, c] : t_) out.set(e.second, e.first, c);
  return out;
}

BiPoly BiPoly::scaled(Elem s) const {
  BiPoly out(f_);
  for (const auto& [e, c] : t_) out.set(e.first, e.second, f_->mul(c, s));
  return out;
}

BiPoly BiPoly::pow(uint64_t e) const {
  BiPoly r = constant(f_, f_->one()), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

BiPoly BiPoly::substitute(const BiPoly& sx, const BiPoly& sy) const {
  const FieldPtr& f = sx.field() ? sx.field() : f_;
  // Horner in y over x-polynomials, with cached powers of sx.
  std::vector<BiPoly> xpow{constant(f, f->one())};
  const int dx = deg_x();
  for (int i = 1; i <= dx; ++i) xpow.push_back(xpow.back() * sx);
  const auto ym = to_y_major();
  BiPoly acc(f);
  for (size_t j = ym.size(); j-- > 0;) {
    BiPoly cj(f);
    for (size_t i = 0; i < ym[j].coeffs().size(); ++i)
      if (ym[j].coeffs()[i].v) cj += xpow[i].scaled(ym[j].coeffs()[i]);
    acc = acc * sy + cj;
  }
  return acc;
}

BiPoly BiPoly::map(const FieldHom& h) const {
  BiPoly out(h.dst());
  for (const auto& [e, c] : t_) out.set(e.first, e.second, h(c));
  return out;
}

BiPoly BiPoly::top_part() const {
  const int d = total_degree();
  BiPoly out(f_);
  for (const auto& [e, c] : t_)
    if (static_cast<int>(e.first + e.second) == d) out.set(e.first, e.second, c);
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (!f_) f_ = o.f_;
  for (const auto& [e, c] : o.t_) set(e.first, e.second, f_->add(coeff(e.first, e.second), c));
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (!f_) f_ = o.f_;
  for (const auto& [e, c] : o.t_) set(e.first, e.second, f_->sub(coeff(e.first, e.second), c));
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  const FieldPtr& f = a.f_ ? a.f_ : b.f_;
  BiPoly out(f);
  for (const auto& [ea, ca] : a.t_) {
    for (const auto& [eb, cb] : b.t_) {
      const uint32_t i = ea.first + eb.first, j = ea.second + eb.second;
      auto [it, inserted] = out.t_.try_emplace({i, j}, f->mul(ca, cb));
      if (!inserted) it->second = f->add(it->second, f->mul(ca, cb));
    }
  }
  std::erase_if(out.t_, [](const auto& kv) { return kv.second.v == 0; });
  return out;
}

BiPoly BiPoly::operator-() const {
  BiPoly out(f_);
  for (const auto& [e, c] : t_) out.set(e.first, e.second, f_->neg(c));
  return out;
}

std::string BiPoly::to_string(const std::string& xv, const std::string& yv) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << " + ";
    first = false;
    const bool bare = e.first == 0 && e.second == 0;
    if (bare || c.v != 1) os << "[" << c.v << "]";
    if (e.first) os << xv << (e.first > 1 ? "^" + std::to_string(e.first) : "");
    if (e.second) os << yv << (e.second > 1 ? "^" + std::to_string(e.second) : "");
  }
  return os.str();
}

// --- ternary forms ------------------------------------------------------------

void TernaryForm::set(const Exp& e, Elem c) {
  if (static_cast<int>(e[0] + e[1] + e[2]) != degree_) throw MathError("monomial degree mismatch in ternary form");
  if (c.v == 0)
    t_.erase(e);
  else
    t_[e] = c;
}

Elem TernaryForm::coeff(const Exp& e) const {
  auto it = t_.find(e);
  return it == t_.end() ? Elem{} : it->second;
}

Elem TernaryForm::eval(const std::array<Elem, 3>& pt) const {
  Elem acc{};
  for (const auto& [e, c] : t_) {
    Elem term = c;
    for (int i = 0; i < 3; ++i) term = f_->mul(term, f_->pow(pt[i], e[i]));
    acc = f_->add(acc, term);
  }
  return acc;
}

TernaryForm TernaryForm::partial(int var) const {
  TernaryForm out(f_, std::max(0, degree_ - 1));
  for (const auto& [e, c] : t_) {
    if (e[var] == 0) continue;
    Exp ne = e;
    --ne[var];
    const Elem nc = f_->mul(c, f_->from_int(e[var] % f_->characteristic()));
    out.set(ne, f_->add(out.coeff(ne), nc));
  }
  return out;
}

TernaryForm TernaryForm::map(const FieldHom& h) const {
  TernaryForm out(h.dst(), degree_);
  for (const auto& [e, c] : t_) out.set(e, h(c));
  return out;
}

std::string TernaryForm::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const char* names = "XYZ";
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << " + ";
    first = false;
    if (c.v != 1 || degree_ == 0) os << "[" << c.v << "]";
    for (int i = 0; i < 3; ++i)
      if (e[i]) os << names[i] << (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
  }
  return os.str();
}

TernaryForm homogenize(const BiPoly& f, int d) {
  if (d < f.total_degree()) throw MathError("homogenization degree below the total degree");
  TernaryForm F(f.field(), d);
  for (const auto& [e, c] : f.terms()) F.set({e.first, e.second, static_cast<uint32_t>(d) - e.first - e.second}, c);
  return F;
}

BiPoly dehomogenize(const TernaryForm& F, int chart) {
  if (chart < 0 || chart > 2) throw MathError("chart index must be 0, 1 or 2");
  BiPoly out(F.field());
  int a = chart == 0 ? 1 : 0;
  int b = chart == 2 ? 1 : 2;
  for (const auto& [e, c] : F.terms()) out.set(e[a], e[b], F.field()->add(out.coeff(e[a], e[b]), c));
  return out;
}

// --- resultants --------------------------------------------------------------

namespace {

// Coefficients of f as a polynomial in `v`, each a polynomial in the other variable.
std::vector<UniPoly> coefficients_in(const BiPoly& f, Var v) {
  return v == Var::Y ? f.to_y_major() : f.swapped().to_y_major();
}

UniPoly specialise_other(const BiPoly& f, Var eliminate, Elem a) {
  return eliminate == Var::Y ? f.at_x(a) : f.at_y(a);
}

void check_resultant_inputs(const BiPoly& f, const BiPoly& g, Var v) {
  if (f.is_zero() || g.is_zero()) throw MathError("resultant of a zero polynomial");
  if (f.degree_in(v) <= 0 || g.degree_in(v) <= 0)
    throw MathError("resultant needs positive degree in the eliminated variable");
}

}  // namespace

int resultant_degree_bound(const BiPoly& f, const BiPoly& g, Var v) {
  const Var other = v == Var::X ? Var::Y : Var::X;
  return f.degree_in(v) * g.degree_in(other) + g.degree_in(v) * f.degree_in(other);
}

UniPoly determinant(std::vector<std::vector<UniPoly>> m, const FieldPtr& f) {
  const size_t n = m.size();
  if (n == 0) return UniPoly::constant(f, f->one());
  bool negate = false;
  UniPoly prev = UniPoly::constant(f, f->one());
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t sel = k + 1;
      while (sel < n && m[sel][k].is_zero()) ++sel;
      if (sel == n) return UniPoly(f);
      std::swap(m[sel], m[k]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        UniPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = num.exact_div(prev);
      }
      m[i][k] = UniPoly(f);
    }
    prev = m[k][k];
  }
  UniPoly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

UniPoly resultant_bareiss(const BiPoly& f, const BiPoly& g, Var v) {
  check_resultant_inputs(f, g, v);
  const FieldPtr& fld = f.field();
  const auto a = coefficients_in(f, v);
  const auto b = coefficients_in(g, v);
  const int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
  const size_t n = static_cast<size_t>(da + db);
  std::vector<std::vector<UniPoly>> m(n, std::vector<UniPoly>(n, UniPoly(fld)));
  for (int r = 0; r < db; ++r)
    for (int i = 0; i <= da; ++i) m[r][r + da - i] = a[i];
  for (int r = 0; r < da; ++r)
    for (int i = 0; i <= db; ++i) m[db + r][r + db - i] = b[i];
  return determinant(std::move(m), fld);
}

UniPoly interpolate(const FieldPtr& f, const std::vector<Elem>& xs, const std::vector<Elem>& ys) {
  // Newton divided differences.
  const size_t n = xs.size();
  std::vector<Elem> c = ys;
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) c[i] = f->div(f->sub(c[i], c[i - 1]), f->sub(xs[i], xs[i - j]));
  UniPoly acc(f);
  for (size_t i = n; i-- > 0;) acc = acc * UniPoly(f, {f->neg(xs[i]), f->one()}) + UniPoly::constant(f, c[i]);
  return acc;
}

UniPoly resultant_interpolated(const BiPoly& f, const BiPoly& g, Var v) {
  check_resultant_inputs(f, g, v);
  const FieldPtr& fld = f.field();
  const int bound = resultant_degree_bound(f, g, v);
  if (static_cast<uint64_t>(bound) + 1 > fld->order())
    throw MathError("field " + fld->name() + " too small to interpolate a resultant of degree " + std::to_string(bound));
  const int da = f.degree_in(v), db = g.degree_in(v);
  std::vector<Elem> xs, ys;
  for (int i = 0; i <= bound; ++i) {
    const Elem a{static_cast<uint32_t>(i)};
    xs.push_back(a);
    ys.push_back(resultant(specialise_other(f, v, a), specialise_other(g, v, a), da, db));
  }
  return interpolate(fld, xs, ys);
}

UniPoly resultant(const BiPoly& f, const BiPoly& g, Var v) {
  check_resultant_inputs(f, g, v);
  const int bound = resultant_degree_bound(f, g, v);
  if (static_cast<uint64_t>(bound) + 1 <= f.field()->order()) return resultant_interpolated(f, g, v);
  return resultant_bareiss(f, g, v);
}

}  // namespace galpts
