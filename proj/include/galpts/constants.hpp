#pragma once

#include <map>
#include <string>
#include <vector>

#include "galpts/field.hpp"

namespace galpts {

enum class Mode { Fm, Gr };

/// Parameters of one curve family member. q = p^n; `e` is m for Fm and r for Gr.
struct FamilyParams {
  uint32_t p = 0;
  unsigned n = 0;
  unsigned e = 0;
  Mode mode = Mode::Fm;

  uint64_t q() const { return ipow(p, n); }
  /// s = (q+1)/m; only meaningful for Fm.
  uint64_t s() const { return (q() + 1) / e; }
};

/// Throws ConfigError unless p is prime, n >= 1 and either m | q+1, 2 <= m < q
/// (Fm) or r >= 2 (Gr).
void validate(const FamilyParams& fp);

/// Scalars used by the constructions for one parameter set, all living in a
/// single field F_{q^K}.
struct FamilyConstants {
  FamilyParams params;
  FieldPtr field;
  unsigned ext_degree = 0;  // K, so field = F_{p^(n K)}

  // Fm mode
  std::vector<Elem> lambda_set;  // lambda^q + lambda = 0
  std::vector<Elem> zeta_set;    // zeta^(q+1) = 1  (Gr: zeta^(q^r+1) = 1)
  Elem a_root{};                 // a^q + a = 1
  std::vector<Elem> omega_set;   // omega^m = -1
  Elem beta_lambda{};            // smallest lambda outside {0, 1}

  // Gr mode
  Elem b{}, c{}, c_prime{};
  std::vector<Elem> alpha_set;  // alpha^q + alpha = 0, the points (alpha:0:1)

  /// Degree over F_p of the smallest subfield containing each named constant.
  std::map<std::string, unsigned> degrees_used;
};

/// g_b(y) = sum_{i<r} (-1)^i b^(q^(i+r)) y^(q^i), evaluated at y.
Elem gb_eval(const Field& f, unsigned n, unsigned r, Elem b, Elem y);

/// Finds all constants in the smallest admissible F_{q^K} with K <= ext_cap
/// and re-verifies every defining relation. Throws ConfigError for bad
/// parameters or an exhausted cap, MathError if a verification fails.
FamilyConstants make_constants(const FamilyParams& fp, unsigned ext_cap = 8);

/// Smallest j dividing f.degree() with a^(p^j) = a.
unsigned subfield_degree(const Field& f, Elem a);

}  // namespace galpts
