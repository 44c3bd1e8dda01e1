#pragma once

#include <array>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "galpts/constants.hpp"
#include "galpts/laurent.hpp"

namespace galpts {

enum class Family { Fm, Gr, Em, Image, Other };
const char* family_name(Family f);

/// Point of P^2 with the first nonzero coordinate scaled to 1.
struct ProjPoint {
  std::array<Elem, 3> c{};

  static ProjPoint make(const Field& f, Elem x, Elem y, Elem z);
  static ProjPoint affine(const Field& f, Elem x, Elem y) { return make(f, x, y, f.one()); }
  bool at_infinity() const { return c[2].v == 0; }
  /// Printed with the last nonzero coordinate equal to 1, e.g. (a:b:1).
  std::string to_string(const Field& f) const;
  friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

/// Projective plane curve F(X,Y,Z) = 0 with its affine equation f(x,y) = F(x,y,1).
struct PlaneCurve {
  FieldPtr field;
  BiPoly affine;
  TernaryForm form;
  int degree = 0;
  Family family = Family::Other;
  FamilyParams params;  // unused for Image/Other
  /// f / lc_y(f) by powers of y when lc_y(f) is a nonzero constant, else empty.
  std::vector<UniPoly> monic_y;

  bool contains(const ProjPoint& pt) const { return form.eval(pt.c).v == 0; }
  std::string describe() const;
};
using CurvePtr = std::shared_ptr<const PlaneCurve>;

/// Fm: y^m = x^q + x, Gr: y^(q^r+1) = x^q + x, Em: y^m = x^(q+1) - 1, over
/// `field` (which must have characteristic p). Validates the parameters.
CurvePtr make_curve(Family family, const FamilyParams& fp, FieldPtr field);
/// A curve given by its affine equation; the degree is the total degree.
CurvePtr make_curve(const BiPoly& affine, Family family = Family::Other);
/// The same curve with coefficients pushed through h.
CurvePtr base_change(const CurvePtr& c, const FieldHom& h);

/// Points over `search` (an extension of the curve's field) where F and all
/// three partials vanish.
std::vector<ProjPoint> singular_locus(const PlaneCurve& curve, const FieldPtr& search);

/// Truncated parametrisation of the unique branch of a curve at `center`.
/// The homogeneous coordinates are given in the chart where the center's last
/// nonzero coordinate is 1; x(t) = X/Z and y(t) = Y/Z are affine Laurent series.
struct BranchExpansion {
  ProjPoint center;
  int chart = 2;  // index of the coordinate set to 1
  int precision = 0;
  std::array<LaurentSeries, 3> hom;
  LaurentSeries x, y;
  // Newton polygon data: the edge (0,B)-(A,0) in local coordinates (u, w)
  int A = 0, B = 0;
};

/// Deterministic in (curve, center, N). Throws MathError for points off the
/// curve, multibranch or wildly ramified centers, or branches that are not
/// rational over the curve's field.
BranchExpansion branch_expand(const PlaneCurve& curve, const ProjPoint& center, int N);

/// A place of the smooth model: a unibranch center with its expansion,
/// re-expanded at higher precision on demand.
class Place {
 public:
  Place(CurvePtr curve, ProjPoint center, std::string label, int precision = 0);
  const PlaneCurve& curve() const { return *curve_; }
  const CurvePtr& curve_ptr() const { return curve_; }
  const ProjPoint& center() const { return center_; }
  const std::string& label() const { return label_; }
  int base_precision() const { return base_; }
  /// Expansion with at least N coefficients (cached).
  const BranchExpansion& expansion(int N) const;
  const BranchExpansion& expansion() const { return expansion(base_); }

  /// Order of num(x,y)/den(x,y) along the branch, doubling the precision until
  /// two consecutive precisions agree. Throws on a zero function or when
  /// `max_precision` is reached.
  int valuation(const BiPoly& num, const BiPoly& den) const;
  int valuation(const BiPoly& num) const;
  int max_precision() const { return 64 * std::max(curve_->degree, 4); }

 private:
  CurvePtr curve_;
  ProjPoint center_;
  std::string label_;
  int base_;
  struct Cache {
    std::mutex mu;
    std::vector<std::unique_ptr<BranchExpansion>> items;
  };
  std::shared_ptr<Cache> cache_;
};

/// Default precision 4 d.
inline int default_precision(const PlaneCurve& c) { return 4 * c.degree; }

/// Valuation along the branch at `point` of the line a X + b Y + c Z.
int intersection_multiplicity(const PlaneCurve& curve, const std::array<Elem, 3>& line, const ProjPoint& point);

}  // namespace galpts
