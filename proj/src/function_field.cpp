#include "galpts/function_field.hpp"

#include <algorithm>
#include <sstream>

namespace galpts {

namespace {

// Rational function in x, kept reduced with a monic denominator.
struct RatFun {
  UniPoly n, d;

  RatFun(UniPoly num, UniPoly den) : n(std::move(num)), d(std::move(den)) {
    if (d.is_zero()) throw MathError("zero denominator");
    if (n.is_zero()) {
      d = UniPoly::constant(d.field(), d.field()->one());
      return;
    }
    UniPoly g = gcd(n, d);
    if (g.degree() > 0) {
      n = n.exact_div(g);
      d = d.exact_div(g);
    }
    Elem s = d.field()->inv(d.lc());
    n = n.scaled(s);
    d = d.scaled(s);
  }
  bool is_zero() const { return n.is_zero(); }
  friend RatFun operator-(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) return a;
    if (a.d == b.d) return RatFun(a.n - b.n, a.d);
    return RatFun(a.n * b.d - b.n * a.d, a.d * b.d);
  }
  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return RatFun(UniPoly(a.n.field()), a.d);
    return RatFun(a.n * b.n, a.d * b.d);
  }
  RatFun inverse() const { return RatFun(d, n); }
};

const std::vector<UniPoly>& monic_eq(const CurvePtr& c) {
  if (c->monic_y.size() < 2)
    throw MathError("function field arithmetic needs an equation monic in y of positive y-degree");
  return c->monic_y;
}

// Reduce a y-polynomial modulo the monic curve equation.
void reduce(std::vector<UniPoly>& v, const std::vector<UniPoly>& f) {
  const size_t n = f.size() - 1;
  for (size_t k = v.size(); k-- > n;) {
    if (v[k].is_zero()) continue;
    UniPoly c = v[k];
    for (size_t j = 0; j < n; ++j)
      if (!f[j].is_zero()) v[k - n + j] -= c * f[j];
    v[k] = UniPoly(c.field());
  }
  v.resize(n, UniPoly(f[0].field()));
}

std::vector<UniPoly> ymul(const std::vector<UniPoly>& a, const std::vector<UniPoly>& b, const FieldPtr& f) {
  std::vector<UniPoly> r(a.size() + b.size() - 1, UniPoly(f));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  return r;
}

}  // namespace

FFElem::FFElem(CurvePtr c) : c_(std::move(c)) {
  const auto& f = monic_eq(c_);
  num_.assign(f.size() - 1, UniPoly(c_->field));
  den_ = UniPoly::constant(c_->field, c_->field->one());
}

FFElem FFElem::constant(CurvePtr c, Elem a) {
  FFElem r(std::move(c));
  r.num_[0] = UniPoly::constant(r.field(), a);
  return r;
}

FFElem FFElem::x(CurvePtr c) {
  FFElem r(std::move(c));
  r.num_[0] = UniPoly::x(r.field());
  return r;
}

FFElem FFElem::y(CurvePtr c) { return from_poly(std::move(c), BiPoly::y(c->field)); }

FFElem FFElem::from_poly(CurvePtr c, const BiPoly& p) {
  FFElem r(std::move(c));
  r.num_ = p.is_zero() ? std::vector<UniPoly>{} : p.to_y_major();
  r.normalize();
  return r;
}

FFElem FFElem::from_x(CurvePtr c, const UniPoly& p) {
  FFElem r(std::move(c));
  r.num_[0] = p;
  r.normalize();
  return r;
}

void FFElem::normalize() {
  const auto& f = monic_eq(c_);
  const FieldPtr& fp = c_->field;
  if (num_.size() < f.size() - 1) num_.resize(f.size() - 1, UniPoly(fp));
  reduce(num_, f);
  if (is_zero()) {
    den_ = UniPoly::constant(fp, fp->one());
    return;
  }
  UniPoly g = den_;
  for (const auto& u : num_) {
    if (g.degree() == 0) break;
    if (!u.is_zero()) g = gcd(g, u);
  }
  if (g.degree() > 0) {
    den_ = den_.exact_div(g);
    for (auto& u : num_)
      if (!u.is_zero()) u = u.exact_div(g);
  }
  Elem s = fp->inv(den_.lc());
  if (s != fp->one()) {
    den_ = den_.scaled(s);
    for (auto& u : num_) u = u.scaled(s);
  }
}

BiPoly FFElem::numerator() const { return BiPoly::from_y_major(c_->field, num_); }

bool FFElem::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](const UniPoly& u) { return u.is_zero(); });
}

bool FFElem::is_constant() const {
  for (size_t j = 1; j < num_.size(); ++j)
    if (!num_[j].is_zero()) return false;
  return num_[0].degree() <= 0 && den_.degree() == 0;
}

FFElem& FFElem::operator+=(const FFElem& o) {
  if (den_ == o.den_) {
    for (size_t j = 0; j < num_.size(); ++j) num_[j] += o.num_[j];
  } else {
    for (size_t j = 0; j < num_.size(); ++j) num_[j] = num_[j] * o.den_ + o.num_[j] * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

FFElem FFElem::operator-() const {
  FFElem r = *this;
  for (auto& u : r.num_) u = -u;
  return r;
}

FFElem& FFElem::operator-=(const FFElem& o) { return *this += -o; }

FFElem& FFElem::operator*=(const FFElem& o) {
  num_ = ymul(num_, o.num_, c_->field);
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

FFElem FFElem::inverse() const {
  if (is_zero()) throw MathError("division by zero in K(C)");
  const FieldPtr& fp = c_->field;
  const size_t n = num_.size();
  bool x_only = true;
  for (size_t j = 1; j < n; ++j) x_only = x_only && num_[j].is_zero();
  FFElem r(c_);
  if (x_only) {
    r.num_[0] = den_;
    r.den_ = num_[0];
    r.normalize();
    return r;
  }
  // Solve (N * sum v_j y^j) = 1 over K(x); column i holds N y^i mod f.
  const auto& f = monic_eq(c_);
  std::vector<std::vector<RatFun>> m(n, std::vector<RatFun>(n + 1, RatFun(UniPoly(fp), UniPoly::constant(fp, fp->one()))));
  std::vector<UniPoly> col = num_;
  for (size_t i = 0; i < n; ++i) {
    if (i > 0) {
      col.insert(col.begin(), UniPoly(fp));
      reduce(col, f);
    }
    for (size_t j = 0; j < n; ++j) m[j][i] = RatFun(col[j], UniPoly::constant(fp, fp->one()));
  }
  m[0][n] = RatFun(UniPoly::constant(fp, fp->one()), UniPoly::constant(fp, fp->one()));
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) throw MathError("division by zero in K(C) (zero divisor; curve reducible?)");
    std::swap(m[piv], m[c]);
    RatFun inv = m[c][c].inverse();
    for (size_t k = c; k <= n; ++k) m[c][k] = m[c][k] * inv;
    for (size_t r2 = 0; r2 < n; ++r2) {
      if (r2 == c || m[r2][c].is_zero()) continue;
      RatFun s = m[r2][c];
      for (size_t k = c; k <= n; ++k)
        if (!m[c][k].is_zero()) m[r2][k] = m[r2][k] - s * m[c][k];
    }
  }
  // common denominator
  UniPoly L = UniPoly::constant(fp, fp->one());
  for (size_t j = 0; j < n; ++j) L = L * m[j][n].d.exact_div(gcd(L, m[j][n].d));
  for (size_t j = 0; j < n; ++j) r.num_[j] = m[j][n].n * L.exact_div(m[j][n].d) * den_;
  r.den_ = L;
  r.normalize();
  return r;
}

FFElem FFElem::pow(int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  FFElem result = constant(c_, c_->field->one()), base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string FFElem::to_string() const {
  std::ostringstream os;
  os << "(" << numerator().to_string() << ")";
  if (den_.degree() > 0) os << "/(" << den_.to_string() << ")";
  return os.str();
}

FFElem normal_form(const CurvePtr& c, const BiPoly& num, const BiPoly& den) {
  FFElem d = FFElem::from_poly(c, den);
  if (d.is_zero()) throw MathError("denominator vanishes on the curve (division by zero in K(C))");
  return FFElem::from_poly(c, num) / d;
}

int valuation(const Place& place, const FFElem& f) {
  if (f.is_zero()) throw MathError("valuation of zero");
  return place.valuation(f.numerator(), f.denominator());
}

}  // namespace galpts
