#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "galpts/function_field.hpp"

namespace galpts {

using Mat3 = std::array<std::array<Elem, 3>, 3>;

/// Rational map src -> dst stored through the pullbacks of the affine
/// coordinates of dst. As a point map it sends (x, y) to (px(x,y), py(x,y)).
struct RatMap {
  CurvePtr src, dst;
  FFElem px, py;
  std::string name;
  /// Projective matrix for linear maps (acting on column vectors (X, Y, Z)).
  std::optional<Mat3> matrix;
  /// Claimed inverse, dst -> src.
  std::shared_ptr<const RatMap> inverse;

  /// Components (F0 : F1 : F2) over a common denominator.
  std::array<BiPoly, 3> components() const;
};

RatMap identity_map(const CurvePtr& c);
/// f o map, for f a function on map.dst.
FFElem pullback(const RatMap& map, const FFElem& f);
/// a o b (apply b first); requires b.dst == a.src.
RatMap compose(const RatMap& a, const RatMap& b);
/// Semantic equality: both coordinate pullbacks agree.
bool same_map(const RatMap& a, const RatMap& b);
/// g(X, Y) for functions X, Y on a common curve.
FFElem eval_at(const BiPoly& g, const FFElem& X, const FFElem& Y);
/// True when dst's equation pulls back to zero on src.
bool maps_into(const RatMap& m);
/// Both compositions with the attached inverse are the identity.
bool inverse_verified(const RatMap& m);

/// Image of the center of `place` under the map, computed along the branch so
/// that indeterminacy points are handled.
ProjPoint image_of(const RatMap& m, const Place& place);

/// Finite group of self-maps with a verified multiplication table.
struct AutGroup {
  CurvePtr curve;
  std::string name;
  std::vector<RatMap> elems;  // identity first
  std::vector<std::vector<int>> table;  // elems[table[i][j]] == elems[i] o elems[j]
  std::vector<int> inverse;

  size_t order() const { return elems.size(); }
  int index_of(const RatMap& m) const;  // -1 when absent
  /// Each row and column of the table is a permutation.
  bool latin_square() const;
};

/// Builds the table; throws MathError if an element is not a self-map, two
/// elements coincide, or the set is not closed under composition.
AutGroup make_group(CurvePtr curve, std::string name, std::vector<RatMap> elems);

enum class Theorem { T1a, T1b, T2 };
const char* theorem_name(Theorem t);

/// Translations x -> x + lambda (T1a, on Fm), scalings x -> zeta x (T1b, on
/// Em) or y -> zeta y (T2, on Gr).
AutGroup make_G1(Theorem th, const FamilyConstants& pc, const CurvePtr& curve);

/// (x, y) -> (1/x, y/x^s) on Fm; its own inverse.
RatMap make_alpha(const CurvePtr& fm);
/// (x, y) -> ((x + l(x-1))/(1 + l(x-1)), y/(1 + l(x-1))^s) on Em; inverse uses -l.
RatMap make_beta(const CurvePtr& em, Elem lambda);
/// (x, y) -> (g_b(y) + c + x, y + b) on Gr; inverse (-g_b(y) + c' + x, y - b).
RatMap make_gamma(const CurvePtr& gr, const FamilyConstants& pc);

/// x^(q+1) - 1 - (x + l(x-1))^(q+1) + (1 + l(x-1))^(q+1), which must vanish.
UniPoly beta_numerator(const FieldPtr& f, uint64_t q, Elem lambda);
/// The expanded form -l(x-1)x^q + l x(x^q-1) + l(x-1) - l(x^q-1).
UniPoly beta_numerator_expanded(const FieldPtr& f, uint64_t q, Elem lambda);

UniPoly make_gb(const FieldPtr& f, unsigned n, unsigned r, Elem b);
/// The four identities of g_b; 2 and 3 are checked symbolically and on 20
/// random values.
std::array<bool, 4> check_gb_properties(const FieldPtr& f, unsigned n, unsigned r, Elem b, uint64_t seed = 0);

enum class ConjSide { HinvGH, HGHinv };
/// h^-1 o g o h or h o g o h^-1 for g in G; h needs an inverse.
AutGroup conjugate(const AutGroup& G, const RatMap& h, ConjSide side, std::string name);
AutGroup group_intersection(const AutGroup& a, const AutGroup& b);

/// Images sigma(P) for sigma in G, in element order.
std::vector<ProjPoint> orbit(const AutGroup& G, const Place& place);

struct FixedFieldReport {
  bool all_fixed = false;
  int degree = 0;
  ExtensionDegreeReport ext;
  bool ok = false;
};
/// K(C)^G = K(t) iff every element fixes t and [K(C):K(t)] = |G|.
FixedFieldReport verify_fixed_field(const AutGroup& G, const FFElem& t, uint64_t seed = 0);

/// The Fm -> Em birational chain and its checks.
struct FmEmChain {
  CurvePtr fm, fbar, mid, em;
  RatMap stage1, stage2, stage3;  // fm -> fbar -> mid -> em
  RatMap composite;               // fm -> em, with explicit inverse attached
  bool stage_maps_ok = false;     // every stage sends its source into its target
  bool mid_identity = false;      // (x^q + x + 1)/x^(q+1) = (y/x^s)^m on fbar
  bool composite_formula = false; // composite equals the closed form
  bool inverse_ok = false;
};
FmEmChain fm_em_chain(const FamilyConstants& pc, const FieldPtr& field);

}  // namespace galpts
