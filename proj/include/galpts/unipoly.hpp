#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "galpts/field.hpp"

namespace galpts {

/// Dense univariate polynomial over a finite field. The coefficient vector is
/// always trimmed, so the zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(FieldPtr f) : f_(std::move(f)) {}
  UniPoly(FieldPtr f, std::vector<Elem> coeffs);

  static UniPoly constant(FieldPtr f, Elem c);
  static UniPoly monomial(FieldPtr f, Elem c, size_t deg);
  static UniPoly x(FieldPtr f) { return monomial(f, f->one(), 1); }
  /// Coefficients given as small integers, lowest degree first.
  static UniPoly from_ints(FieldPtr f, const std::vector<int64_t>& coeffs);

  const FieldPtr& field() const { return f_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Elem coeff(size_t i) const { return i < c_.size() ? c_[i] : Elem{}; }
  Elem lc() const { return c_.empty() ? Elem{} : c_.back(); }

  Elem eval(Elem a) const;
  UniPoly monic() const;
  UniPoly derivative() const;
  UniPoly scaled(Elem s) const;
  UniPoly shifted(size_t k) const;  // multiply by x^k
  UniPoly pow(uint64_t e) const;
  /// this(g(x)).
  UniPoly compose(const UniPoly& g) const;
  UniPoly map(const FieldHom& h) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly operator-() const;
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division; throws on a zero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  UniPoly operator/(const UniPoly& d) const { return divmod(d).first; }
  UniPoly operator%(const UniPoly& d) const { return divmod(d).second; }
  /// Quotient when the division is known to be exact; throws otherwise.
  UniPoly exact_div(const UniPoly& d) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  FieldPtr f_;
  std::vector<Elem> c_;
};

/// Monic gcd (zero if both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly powmod(const UniPoly& base, uint64_t e, const UniPoly& mod);

/// Product of the distinct monic irreducible factors of f (characteristic-p
/// aware: inseparable parts g(x^p) are handled by taking p-th roots).
UniPoly squarefree_part(const UniPoly& f);

/// Distinct roots of f in its coefficient field, sorted by encoding. Fields up
/// to kScanLimit elements are scanned exhaustively; larger ones use
/// Cantor-Zassenhaus equal-degree splitting.
std::vector<Elem> find_roots(const UniPoly& f);
inline constexpr uint64_t kRootScanLimit = uint64_t{1} << 20;
std::vector<Elem> find_roots_scan(const UniPoly& f);
std::vector<Elem> find_roots_split(const UniPoly& f, uint64_t seed = 1);

/// Determinant of a square matrix over the field (Gaussian elimination).
Elem determinant(const Field& f, std::vector<std::vector<Elem>> m);

/// Sylvester resultant of two univariate polynomials with the given formal
/// degrees (leading coefficients may vanish).
Elem resultant(const UniPoly& a, const UniPoly& b, int deg_a, int deg_b);
inline Elem resultant(const UniPoly& a, const UniPoly& b) { return resultant(a, b, a.degree(), b.degree()); }

/// Kernel basis of a matrix over the field (rows x cols, solutions of M v = 0).
std::vector<std::vector<Elem>> kernel(const Field& f, std::vector<std::vector<Elem>> m, size_t cols);

}  // namespace galpts
