#pragma once

#include <optional>
#include <vector>

#include "galpts/bipoly.hpp"

namespace galpts {

/// Truncated Laurent series sum_i c_i t^(val + i), known modulo t^prec.
/// A series whose known coefficients all vanish is "zero to precision"; its
/// valuation is unknown beyond being >= prec.
class LaurentSeries {
 public:
  static constexpr int kExact = 1 << 28;  // precision of exact (finite) series

  LaurentSeries() = default;
  LaurentSeries(FieldPtr f, int val, std::vector<Elem> coeffs, int prec);

  static LaurentSeries zero(FieldPtr f, int prec = kExact) { return LaurentSeries(std::move(f), prec, {}, prec); }
  static LaurentSeries constant(FieldPtr f, Elem c) { return monomial(std::move(f), c, 0); }
  static LaurentSeries monomial(FieldPtr f, Elem c, int e);

  const FieldPtr& field() const { return f_; }
  int precision() const { return prec_; }
  bool is_exact() const { return prec_ >= kExact / 2; }
  /// True when no nonzero coefficient is known.
  bool vanishes() const { return c_.empty(); }
  /// Valuation if some coefficient below the precision is nonzero.
  std::optional<int> valuation() const;
  Elem lead() const { return c_.empty() ? Elem{} : c_.front(); }
  /// Coefficient of t^e (zero below the valuation; throws at or above prec).
  Elem coeff(int e) const;
  const std::vector<Elem>& coeffs() const { return c_; }
  int val() const { return val_; }

  LaurentSeries truncated(int prec) const;
  LaurentSeries inverse() const;  // requires a known nonzero coefficient
  LaurentSeries pow(uint64_t e) const;
  LaurentSeries scaled(Elem s) const;
  LaurentSeries shifted(int k) const;  // multiply by t^k

  LaurentSeries& operator+=(const LaurentSeries& o);
  LaurentSeries& operator-=(const LaurentSeries& o);
  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  LaurentSeries operator-() const;
  friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) { return a * b.inverse(); }
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    return a.prec_ == b.prec_ && a.val_ == b.val_ && a.c_ == b.c_;
  }

 private:
  void normalize();
  FieldPtr f_;
  int val_ = 0;
  std::vector<Elem> c_;
  int prec_ = kExact;
};

/// u(a(t)) by Horner.
LaurentSeries eval_series(const UniPoly& u, const LaurentSeries& a);
/// f(a(t), b(t)).
LaurentSeries eval_series(const BiPoly& f, const LaurentSeries& a, const LaurentSeries& b);

}  // namespace galpts
