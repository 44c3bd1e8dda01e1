#pragma once

#include <random>
#include <string>
#include <vector>

#include "galpts/curve.hpp"

namespace galpts {

/// Element of K(C) as (sum_j num_j(x) y^j) / den(x), with deg_y < n = deg_y f,
/// den monic and gcd(den, num_0, ..., num_{n-1}) = 1. This form is unique, so
/// equality is structural. Needs an affine equation whose y^n coefficient is a
/// nonzero constant.
class FFElem {
 public:
  FFElem() = default;
  explicit FFElem(CurvePtr c);  // zero

  static FFElem constant(CurvePtr c, Elem a);
  static FFElem x(CurvePtr c);
  static FFElem y(CurvePtr c);
  static FFElem from_poly(CurvePtr c, const BiPoly& p);
  static FFElem from_x(CurvePtr c, const UniPoly& p);

  const CurvePtr& curve() const { return c_; }
  const FieldPtr& field() const { return c_->field; }
  const std::vector<UniPoly>& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  BiPoly numerator() const;
  BiPoly denominator() const { return BiPoly::from_uni(den_, Var::X); }

  bool is_zero() const;
  /// True when the element lies in K (no x or y dependence).
  bool is_constant() const;
  FFElem inverse() const;
  FFElem pow(int64_t e) const;

  FFElem& operator+=(const FFElem& o);
  FFElem& operator-=(const FFElem& o);
  FFElem& operator*=(const FFElem& o);
  friend FFElem operator+(FFElem a, const FFElem& b) { return a += b; }
  friend FFElem operator-(FFElem a, const FFElem& b) { return a -= b; }
  friend FFElem operator*(FFElem a, const FFElem& b) { return a *= b; }
  friend FFElem operator/(const FFElem& a, const FFElem& b) { return a * b.inverse(); }
  FFElem operator-() const;
  friend bool operator==(const FFElem& a, const FFElem& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  std::string to_string() const;

 private:
  void normalize();
  CurvePtr c_;
  std::vector<UniPoly> num_;
  UniPoly den_;
};

/// num/den in canonical form. Throws MathError if den vanishes on the curve.
FFElem normal_form(const CurvePtr& c, const BiPoly& num, const BiPoly& den);
inline FFElem normal_form(const CurvePtr& c, const BiPoly& p) { return FFElem::from_poly(c, p); }

/// Order of f at the place (f != 0).
int valuation(const Place& place, const FFElem& f);

/// Both [K(C):K(t)] computations with their sampling data.
struct ExtensionDegreeReport {
  int eliminant = 0;  // method (a)
  int fibers = 0;     // method (b)
  std::vector<int> samples;
  unsigned sampling_field_degree = 0;
};

/// [K(C):K(t)], computed by the eliminant method and by generic fiber
/// counting; throws MathError if t is constant or the methods disagree.
int extension_degree(const FFElem& t, uint64_t seed = 0, ExtensionDegreeReport* report = nullptr);
int extension_degree_eliminant(const FFElem& t, std::mt19937_64& rng);
int extension_degree_fibers(const FFElem& t, std::mt19937_64& rng, std::vector<int>* samples = nullptr,
                            int n_samples = 5);

/// Smallest extension of the curve's field with at least 100 d^2 elements.
FieldPtr sampling_field(const PlaneCurve& c);

}  // namespace galpts
