#include "galpts/laurent.hpp"

#include <algorithm>

namespace galpts {

LaurentSeries::LaurentSeries(FieldPtr f, int val, std::vector<Elem> coeffs, int prec)
    : f_(std::move(f)), val_(val), c_(std::move(coeffs)), prec_(std::min(prec, kExact)) {
  normalize();
}

LaurentSeries LaurentSeries::monomial(FieldPtr f, Elem c, int e) {
  if (c.v == 0) return zero(std::move(f));
  return LaurentSeries(std::move(f), e, {c}, kExact);
}

void LaurentSeries::normalize() {
  if (prec_ >= kExact / 2) prec_ = kExact;
  // drop coefficients at or beyond the precision
  if (val_ + static_cast<long>(c_.size()) > prec_) c_.resize(std::max(0, prec_ - val_));
  size_t lead = 0;
  while (lead < c_.size() && c_[lead].v == 0) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    val_ = prec_;
    return;
  }
  if (lead) {
    c_.erase(c_.begin(), c_.begin() + lead);
    val_ += static_cast<int>(lead);
  }
  while (!c_.empty() && c_.back().v == 0) c_.pop_back();
}

std::optional<int> LaurentSeries::valuation() const {
  if (c_.empty()) return std::nullopt;
  return val_;
}

Elem LaurentSeries::coeff(int e) const {
  if (e >= prec_) throw MathError("series coefficient beyond known precision");
  if (e < val_ || e - val_ >= static_cast<int>(c_.size())) return Elem{};
  return c_[e - val_];
}

LaurentSeries LaurentSeries::truncated(int prec) const {
  return LaurentSeries(f_, val_, c_, std::min(prec, prec_));
}

LaurentSeries LaurentSeries::scaled(Elem s) const {
  if (s.v == 0) return zero(f_);
  std::vector<Elem> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = f_->mul(c_[i], s);
  return LaurentSeries(f_, val_, std::move(c), prec_);
}

LaurentSeries LaurentSeries::shifted(int k) const {
  return LaurentSeries(f_, val_ + k, c_, is_exact() ? kExact : prec_ + k);
}

LaurentSeries LaurentSeries::operator-() const { return scaled(f_->neg(f_->one())); }

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
  if (!f_) return *this = o;
  if (!o.f_) return *this;
  int prec = std::min(prec_, o.prec_);
  if (o.c_.empty()) {
    prec_ = prec;
    normalize();
    return *this;
  }
  if (c_.empty()) {
    int keep = prec;
    *this = o;
    prec_ = keep;
    normalize();
    return *this;
  }
  int lo = std::min(val_, o.val_);
  int hi = std::max(val_ + static_cast<int>(c_.size()), o.val_ + static_cast<int>(o.c_.size()));
  hi = std::min(hi, prec);
  std::vector<Elem> c(std::max(0, hi - lo));
  for (size_t i = 0; i < c_.size(); ++i) {
    int e = val_ + static_cast<int>(i);
    if (e < hi) c[e - lo] = c_[i];
  }
  for (size_t i = 0; i < o.c_.size(); ++i) {
    int e = o.val_ + static_cast<int>(i);
    if (e < hi) c[e - lo] = f_->add(c[e - lo], o.c_[i]);
  }
  val_ = lo;
  c_ = std::move(c);
  prec_ = prec;
  normalize();
  return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) { return *this += -o; }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  const FieldPtr& f = a.f_;
  auto sat = [](long v) { return static_cast<int>(std::min<long>(v, LaurentSeries::kExact)); };
  int prec = std::min(sat(long(a.val_) + b.prec_), sat(long(b.val_) + a.prec_));
  if (a.c_.empty() || b.c_.empty()) return LaurentSeries::zero(f, prec);
  int val = a.val_ + b.val_;
  long len = static_cast<long>(a.c_.size() + b.c_.size()) - 1;
  len = std::min<long>(len, long(prec) - val);
  if (len <= 0) return LaurentSeries::zero(f, prec);
  std::vector<Elem> c(len);
  for (size_t i = 0; i < a.c_.size() && static_cast<long>(i) < len; ++i) {
    if (a.c_[i].v == 0) continue;
    size_t jmax = std::min<size_t>(b.c_.size(), len - i);
    for (size_t j = 0; j < jmax; ++j) c[i + j] = f->add(c[i + j], f->mul(a.c_[i], b.c_[j]));
  }
  return LaurentSeries(f, val, std::move(c), prec);
}

LaurentSeries LaurentSeries::inverse() const {
  if (c_.empty()) throw MathError("inverse of a series with no known nonzero coefficient");
  const Field& f = *f_;
  if (is_exact()) {
    if (c_.size() == 1) return LaurentSeries(f_, -val_, {f.inv(c_[0])}, kExact);
    throw MathError("inverse of an exact non-monomial series needs a precision");
  }
  int rel = prec_ - val_;
  std::vector<Elem> r(rel);
  Elem inv0 = f.inv(c_[0]);
  r[0] = inv0;
  for (int k = 1; k < rel; ++k) {
    Elem s{};
    int jmax = std::min<int>(k, static_cast<int>(c_.size()) - 1);
    for (int j = 1; j <= jmax; ++j) s = f.add(s, f.mul(c_[j], r[k - j]));
    r[k] = f.neg(f.mul(s, inv0));
  }
  return LaurentSeries(f_, -val_, std::move(r), -val_ + rel);
}

LaurentSeries LaurentSeries::pow(uint64_t e) const {
  LaurentSeries result = constant(f_, f_->one()), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

LaurentSeries eval_series(const UniPoly& u, const LaurentSeries& a) {
  const FieldPtr& f = a.field();
  if (u.is_zero()) return LaurentSeries::zero(f);
  LaurentSeries r = LaurentSeries::constant(f, u.lc());
  for (int i = u.degree() - 1; i >= 0; --i) r = r * a + LaurentSeries::constant(f, u.coeff(i));
  return r;
}

LaurentSeries eval_series(const BiPoly& g, const LaurentSeries& a, const LaurentSeries& b) {
  const FieldPtr& f = a.field();
  if (g.is_zero()) return LaurentSeries::zero(f);
  auto cols = g.to_y_major();
  LaurentSeries r = eval_series(cols.back(), a);
  for (int j = static_cast<int>(cols.size()) - 2; j >= 0; --j) r = r * b + eval_series(cols[j], a);
  return r;
}

}  // namespace galpts
