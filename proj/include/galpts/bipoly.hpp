#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "galpts/unipoly.hpp"

namespace galpts {

enum class Var { X, Y };

/// Sparse polynomial in two variables x, y. Zero coefficients are never stored.
class BiPoly {
 public:
  using Exp = std::pair<uint32_t, uint32_t>;  // (deg in x, deg in y)
  using Terms = std::map<Exp, Elem>;

  BiPoly() = default;
  explicit BiPoly(FieldPtr f) : f_(std::move(f)) {}

  static BiPoly constant(FieldPtr f, Elem c);
  static BiPoly monomial(FieldPtr f, Elem c, uint32_t i, uint32_t j);
  static BiPoly x(FieldPtr f) { return monomial(f, f->one(), 1, 0); }
  static BiPoly y(FieldPtr f) { return monomial(f, f->one(), 0, 1); }
  /// A univariate polynomial viewed in the given variable.
  static BiPoly from_uni(const UniPoly& u, Var v);
  /// Sum_j coeffs[j](x) y^j.
  static BiPoly from_y_major(FieldPtr f, const std::vector<UniPoly>& coeffs);

  const FieldPtr& field() const { return f_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t term_count() const { return t_.size(); }
  Elem coeff(uint32_t i, uint32_t j) const;
  void set(uint32_t i, uint32_t j, Elem c);

  int deg_x() const;
  int deg_y() const;
  int total_degree() const;
  int degree_in(Var v) const { return v == Var::X ? deg_x() : deg_y(); }
  /// Coefficient of y^j as a polynomial in x.
  UniPoly coeff_y(uint32_t j) const;
  /// Coefficient of x^i as a polynomial in y.
  UniPoly coeff_x(uint32_t i) const;
  std::vector<UniPoly> to_y_major() const;

  Elem eval(Elem a, Elem b) const;
  /// Specialise x = a, giving a polynomial in y.
  UniPoly at_x(Elem a) const;
  /// Specialise y = b, giving a polynomial in x.
  UniPoly at_y(Elem b) const;
  BiPoly partial(Var v) const;
  BiPoly swapped() const;
  BiPoly scaled(Elem s) const;
  BiPoly pow(uint64_t e) const;
  /// this(sx, sy) for bivariate substitutions.
  BiPoly substitute(const BiPoly& sx, const BiPoly& sy) const;
  BiPoly map(const FieldHom& h) const;
  /// Homogeneous part of top total degree.
  BiPoly top_part() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly operator-() const;
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }

  std::string to_string(const std::string& xv = "x", const std::string& yv = "y") const;

 private:
  FieldPtr f_;
  Terms t_;
};

/// Homogeneous form in X, Y, Z of a fixed degree.
class TernaryForm {
 public:
  using Exp = std::array<uint32_t, 3>;

  TernaryForm() = default;
  TernaryForm(FieldPtr f, int degree) : f_(std::move(f)), degree_(degree) {}

  const FieldPtr& field() const { return f_; }
  int degree() const { return degree_; }
  const std::map<Exp, Elem>& terms() const { return t_; }
  void set(const Exp& e, Elem c);
  Elem coeff(const Exp& e) const;
  bool is_zero() const { return t_.empty(); }

  Elem eval(const std::array<Elem, 3>& pt) const;
  TernaryForm partial(int var) const;
  TernaryForm map(const FieldHom& h) const;
  std::string to_string() const;

  friend bool operator==(const TernaryForm& a, const TernaryForm& b) {
    return a.degree_ == b.degree_ && a.t_ == b.t_;
  }

 private:
  FieldPtr f_;
  int degree_ = 0;
  std::map<Exp, Elem> t_;
};

/// Z-homogenisation to degree d (d >= total degree of f).
TernaryForm homogenize(const BiPoly& f, int d);
/// Set coordinate `chart` (0 = X, 1 = Y, 2 = Z) to 1; the remaining two
/// coordinates, in order, become x and y.
BiPoly dehomogenize(const TernaryForm& F, int chart = 2);

/// Sylvester resultant eliminating `v`; the result is a polynomial in the
/// other variable. Picks evaluation/interpolation when the field has enough
/// points and fraction-free (Bareiss) elimination over K[t] otherwise.
UniPoly resultant(const BiPoly& f, const BiPoly& g, Var eliminate);
UniPoly resultant_bareiss(const BiPoly& f, const BiPoly& g, Var eliminate);
UniPoly resultant_interpolated(const BiPoly& f, const BiPoly& g, Var eliminate);
/// Upper bound for the degree of the resultant in the remaining variable.
int resultant_degree_bound(const BiPoly& f, const BiPoly& g, Var eliminate);

/// Determinant over K[t] by Bareiss fraction-free elimination.
UniPoly determinant(std::vector<std::vector<UniPoly>> m, const FieldPtr& f);

/// Polynomial of degree < xs.size() through the points (xs[i], ys[i]).
UniPoly interpolate(const FieldPtr& f, const std::vector<Elem>& xs, const std::vector<Elem>& ys);

}  // namespace galpts
